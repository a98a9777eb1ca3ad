//! Placement of increases and decreases within a round.
//!
//! Positions are parent-stitch indices. Evenness is guaranteed by a
//! Bresenham-style spread (cyclic gaps differ by at most one); staggering is
//! achieved by rotating each round's spread away from the stitches the
//! previous round's changes produced, so increases do not stack.

use super::PatternError;

/// Change positions for one round. Uniform rounds fill exactly one of the
/// two lists; arc-mapped rounds of the one-sided band may fill both.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Changes {
    /// Parents worked twice (listed once) or three times (listed twice).
    pub increases: Vec<u32>,
    /// Heads of merged parent pairs `(p, p+1)`.
    pub decreases: Vec<u32>,
}

/// Maximally even selection of `d` positions out of `m`, rotated by `k`.
fn spread(m: u32, d: u32, k: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..d)
        .map(|i| (((i as u64 * m as u64) / d as u64) as u32 + k) % m)
        .collect();
    v.sort_unstable();
    v
}

fn check_ratio(prev_n: u32, next_n: u32) -> Result<(), PatternError> {
    if next_n < 1 || next_n > 3 * prev_n || next_n < prev_n.div_ceil(2) {
        return Err(PatternError::GaugeIncompatible {
            prev: prev_n,
            next: next_n,
        });
    }
    Ok(())
}

/// Stateless even allocation with no stagger history ("offset 0 on first
/// application"). Returns increase positions for growth, decrease heads for
/// shrinkage.
pub fn allocate_changes(prev_n: u32, next_n: u32) -> Result<Vec<u32>, PatternError> {
    let mut alloc = ChangeAllocator::new();
    let ch = alloc.allocate(prev_n, next_n)?;
    Ok(if next_n >= prev_n {
        ch.increases
    } else {
        ch.decreases
    })
}

/// Stateful allocator used while planning a sequence of rounds: remembers
/// which child stitches the previous changes produced and rotates the next
/// selection off them.
#[derive(Debug, Clone)]
pub struct ChangeAllocator {
    /// Occupancy of change-produced stitches in the round that will serve as
    /// the next set of parents.
    occupied: Option<Vec<bool>>,
    /// Offset of the previous selection as a fraction of its round.
    last_frac: Option<f64>,
}

impl ChangeAllocator {
    pub fn new() -> Self {
        ChangeAllocator {
            occupied: None,
            last_frac: None,
        }
    }

    pub fn allocate(&mut self, prev_n: u32, next_n: u32) -> Result<Changes, PatternError> {
        check_ratio(prev_n, next_n)?;
        let dn = next_n as i64 - prev_n as i64;
        let changes = if dn == 0 {
            Changes::default()
        } else if dn > 0 {
            let d = dn as u32;
            let base = d / prev_n;
            let rem = d % prev_n;
            let mut inc = Vec::with_capacity(d as usize);
            if rem > 0 {
                let extra = spread(prev_n, rem, self.pick_rotation(prev_n, rem, 1));
                for p in 0..prev_n {
                    for _ in 0..base {
                        inc.push(p);
                    }
                    if extra.binary_search(&p).is_ok() {
                        inc.push(p);
                    }
                }
            } else {
                for p in 0..prev_n {
                    for _ in 0..base {
                        inc.push(p);
                    }
                }
            }
            Changes {
                increases: inc,
                decreases: Vec::new(),
            }
        } else {
            let d = (-dn) as u32;
            let dec = spread(prev_n, d, self.pick_rotation(prev_n, d, 2));
            Changes {
                increases: Vec::new(),
                decreases: dec,
            }
        };
        self.remember(prev_n, next_n, &changes);
        Ok(changes)
    }

    /// Choose the rotation whose selection overlaps the previous round's
    /// change stitches the least; ties go to the rotation nearest half a gap
    /// past the previous offset, then to the smallest rotation.
    fn pick_rotation(&self, m: u32, d: u32, span: u32) -> u32 {
        let gap = m as f64 / d as f64;
        let target = match self.last_frac {
            None => 0.0,
            Some(fr) => (fr * m as f64 + gap / 2.0) % m as f64,
        };
        let occupied = self.occupied.as_deref().filter(|o| o.len() == m as usize);
        let mut best = (u32::MAX, f64::INFINITY, 0u32);
        for k in 0..m {
            let overlap = match occupied {
                None => 0,
                Some(occ) => spread(m, d, k)
                    .iter()
                    .map(|&p| (0..span).filter(|&s| occ[((p + s) % m) as usize]).count() as u32)
                    .sum(),
            };
            let dist = {
                let raw = (k as f64 - target).abs() % m as f64;
                raw.min(m as f64 - raw)
            };
            if overlap < best.0 || (overlap == best.0 && dist + 1e-9 < best.1) {
                best = (overlap, dist, k);
            }
            if occupied.is_none() {
                break; // first application: rotation 0
            }
        }
        best.2
    }

    /// Record which stitches of the new round came from changes.
    fn remember(&mut self, prev_n: u32, next_n: u32, ch: &Changes) {
        if ch.increases.is_empty() && ch.decreases.is_empty() {
            // plain round: occupancy carries over unchanged
            if let Some(occ) = &self.occupied {
                if occ.len() != next_n as usize {
                    self.occupied = None;
                }
            }
            return;
        }
        let mut occ = vec![false; next_n as usize];
        for (child, parents) in parents_of_children(prev_n, &ch.increases, &ch.decreases)
            .iter()
            .enumerate()
        {
            if parents.len() == 2 {
                occ[child] = true; // merged stitch
            }
        }
        for children in children_of_parents(prev_n, &ch.increases, &ch.decreases) {
            if children.len() >= 2 {
                for &c in &children {
                    occ[c as usize] = true;
                }
            }
        }
        self.occupied = Some(occ);
        if let Some(&first) = ch.increases.first().or(ch.decreases.first()) {
            self.last_frac = Some(first as f64 / prev_n as f64);
        }
    }
}

impl Default for ChangeAllocator {
    fn default() -> Self {
        Self::new()
    }
}

/// For each child stitch of the next round, the parent stitch indices it is
/// worked into: one parent normally, two for a merged (decreased) stitch.
/// Children are produced in parent order; a parent listed `m` times in
/// `increases` yields `1 + m` consecutive children.
pub fn parents_of_children(prev_n: u32, increases: &[u32], decreases: &[u32]) -> Vec<Vec<u32>> {
    let mut mult = vec![0u32; prev_n as usize];
    for &p in increases {
        mult[p as usize] += 1;
    }
    let dec: Vec<u32> = decreases.to_vec();
    // A head at the last index merges cyclically with parent 0; that child
    // is emitted last and parent 0 is skipped at the front.
    let wrap = prev_n > 1 && dec.binary_search(&(prev_n - 1)).is_ok();
    let mut out = Vec::with_capacity(prev_n as usize);
    let mut p = if wrap { 1 } else { 0 };
    let stop = if wrap { prev_n - 1 } else { prev_n };
    while p < stop {
        if dec.binary_search(&p).is_ok() && p + 1 < stop {
            out.push(vec![p, p + 1]);
            p += 2;
        } else {
            for _ in 0..=mult[p as usize] {
                out.push(vec![p]);
            }
            p += 1;
        }
    }
    if wrap {
        out.push(vec![prev_n - 1, 0]);
    }
    out
}

/// Inverse view of [`parents_of_children`]: children indices per parent.
pub fn children_of_parents(prev_n: u32, increases: &[u32], decreases: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); prev_n as usize];
    for (child, parents) in parents_of_children(prev_n, increases, decreases)
        .iter()
        .enumerate()
    {
        for &p in parents {
            out[p as usize].push(child as u32);
        }
    }
    out
}

/// Child-round index at which each increase cluster starts: the i-th listed
/// increase parent `p_i` begins its children at `p_i + i`. Used to mirror an
/// increase round into the decrease round that undoes it.
pub fn increase_child_starts(increases: &[u32]) -> Vec<u32> {
    increases
        .iter()
        .enumerate()
        .map(|(i, &p)| p + i as u32)
        .collect()
}

//! Render patterns to human- and machine-readable artifacts.
//!
//! Every renderer is a pure function of its input: identical patterns yield
//! byte-identical output. Floats are written with fixed conventions (six
//! decimals in JSON and OBJ, two in prose) so no locale or hash-order noise
//! can creep in.

mod obj;

pub use obj::{export_obj, MeshSampling};

use crate::pattern::{Construction, Direction, Pattern, RoundPlan, StitchGraph};
use crate::surfaces::Family;
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EmitError {
    #[error("invalid sampling: {0}")]
    InvalidSampling(String),
    #[error(transparent)]
    Surface(#[from] crate::surfaces::SurfaceError),
}

/// Worked-cell symbols of one round, in crochet vocabulary: sc (plain),
/// inc (two in one), inc3 (three in one), dec (two merged into one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cell {
    Inc,
    Inc3,
    Dec,
}

impl Cell {
    fn word(&self) -> &'static str {
        match self {
            Cell::Inc => "inc",
            Cell::Inc3 => "inc3",
            Cell::Dec => "dec",
        }
    }
}

/// Parent count the round is worked into; the first edge round of the
/// one-sided band traverses its centre row twice.
fn worked_parent_count(pattern: &Pattern, i: usize) -> Option<u32> {
    let round = &pattern.rounds[i];
    let parent = &pattern.rounds[round.parent?];
    let doubled = pattern.construction == Construction::MoebiusBoundary && i == 1;
    Some(if doubled {
        2 * parent.stitches
    } else {
        parent.stitches
    })
}

/// Run-length body of one round: segments of plain stitches between change
/// cells, grouped when they repeat, with the trailing plain run always
/// written out.
fn round_body(round: &RoundPlan, parent_count: Option<u32>) -> String {
    let Some(prev_n) = parent_count else {
        return format!("{} sc", round.stitches);
    };
    if round.increases.is_empty() && round.decreases.is_empty() {
        return format!("{} sc", round.stitches);
    }
    // (plain run, change) units in parent order
    let mut units: Vec<(u32, Cell)> = Vec::new();
    let mut run = 0u32;
    let mut p = 0u32;
    while p < prev_n {
        if round.decreases.binary_search(&p).is_ok() {
            units.push((run, Cell::Dec));
            run = 0;
            p += 2;
            continue;
        }
        let mult = round.increases.iter().filter(|&&q| q == p).count();
        match mult {
            0 => run += 1,
            1 => {
                units.push((run, Cell::Inc));
                run = 0;
            }
            _ => {
                units.push((run, Cell::Inc3));
                run = 0;
            }
        }
        p += 1;
    }
    let trailing = run;
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < units.len() {
        let mut reps = 1;
        while i + reps < units.len() && units[i + reps] == units[i] {
            reps += 1;
        }
        let (plain, cell) = units[i];
        let unit = if plain == 0 {
            format!("({})", cell.word())
        } else {
            format!("({} sc, {})", plain, cell.word())
        };
        parts.push(format!("{unit} \u{d7}{reps}"));
        i += reps;
    }
    parts.push(format!("{trailing} sc"));
    parts.join(", ")
}

fn delta_label(round: &RoundPlan) -> String {
    if round.is_start() {
        "start".to_string()
    } else if round.delta >= 0 {
        format!("+{}", round.delta)
    } else {
        format!("{}", round.delta)
    }
}

/// One line per round, plus notes and section markers. Deterministic.
pub fn render_text(pattern: &Pattern) -> String {
    let mut out = String::new();
    let fam = pattern.surface.family().name();
    out.push_str(&format!(
        "# {} pattern — gauge W={:.2} cm, H={:.2} cm, scale={:.3}\n",
        fam,
        pattern.gauge.width(),
        pattern.gauge.height(),
        pattern.surface.scale(),
    ));
    for note in &pattern.notes {
        out.push_str(&format!("# {note}\n"));
    }
    let row_word = if pattern.construction == Construction::RowsHelicoid {
        "Row"
    } else {
        "Round"
    };
    let mut last_dir: Option<Direction> = None;
    for (i, round) in pattern.rounds.iter().enumerate() {
        let bidirectional = pattern.construction == Construction::BidirectionalRichmond;
        if bidirectional && i == 1 && round.direction == Direction::Outward {
            out.push_str("-- outward: toward the rim --\n");
        }
        if last_dir != Some(round.direction) {
            match round.direction {
                Direction::Mirror => {
                    out.push_str("-- mirrored half: decrease back to the start --\n")
                }
                Direction::Inward if last_dir.is_some() => {
                    out.push_str("-- inward: toward the planar edge --\n")
                }
                _ => {}
            }
            last_dir = Some(round.direction);
        }
        let label = if round.direction == Direction::Mirror {
            " [decrease]"
        } else {
            ""
        };
        out.push_str(&format!(
            "{} {} ({} sts, {}){}: {}\n",
            row_word,
            round.index,
            round.stitches,
            delta_label(round),
            label,
            round_body(round, worked_parent_count(pattern, i)),
        ));
    }
    out.push_str(&format!("Total: {} sts\n", pattern.total_stitches));
    out
}

/// Table layout: `ℓ,delta_N,N`, one data row per round, then a total row.
/// Starting rounds leave the delta column empty.
pub fn render_csv(pattern: &Pattern) -> String {
    let mut out = String::from("\u{2113},delta_N,N\n");
    for round in &pattern.rounds {
        let delta = if round.is_start() {
            String::new()
        } else {
            round.delta.to_string()
        };
        out.push_str(&format!("{},{},{}\n", round.index, delta, round.stitches));
    }
    out.push_str(&format!("total,,{}\n", pattern.total_stitches));
    out
}

/// Round a value to six decimals for stable JSON output.
fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

fn surface_value(pattern: &Pattern) -> Value {
    let mut m = Map::new();
    let fam = pattern.surface.family();
    m.insert("family".into(), json!(fam.name()));
    match fam {
        Family::Disc => {}
        Family::Sphere { radius } | Family::Hyperbolic { radius } => {
            m.insert("S".into(), json!(round6(*radius)));
        }
        Family::Enneper { order } => {
            m.insert("n".into(), json!(order));
        }
        Family::Richmond {
            order,
            r_min,
            r_max,
        } => {
            m.insert("n".into(), json!(order));
            m.insert("r_min".into(), json!(round6(*r_min)));
            m.insert("r_max".into(), json!(round6(*r_max)));
        }
        Family::Bour { r_max } => {
            m.insert("r_max".into(), json!(round6(*r_max)));
        }
        Family::Catenoid { neck, r_max } => {
            m.insert("c".into(), json!(round6(*neck)));
            m.insert("r_max".into(), json!(round6(*r_max)));
        }
        Family::Helicoid { neck, turns, r_max } => {
            m.insert("c".into(), json!(round6(*neck)));
            m.insert("turns".into(), json!(turns));
            m.insert("r_max".into(), json!(round6(*r_max)));
        }
        Family::MobiusRuled { half_width } => {
            m.insert("half_width".into(), json!(round6(*half_width)));
        }
    }
    m.insert("scale".into(), json!(round6(pattern.surface.scale())));
    Value::Object(m)
}

/// Machine-readable plan with stable key order and six-decimal numbers.
pub fn render_json(pattern: &Pattern) -> String {
    let rounds: Vec<Value> = pattern
        .rounds
        .iter()
        .map(|r| {
            let mut m = Map::new();
            m.insert("l".into(), json!(r.index));
            m.insert(
                "direction".into(),
                json!(match r.direction {
                    Direction::Outward => "outward",
                    Direction::Inward => "inward",
                    Direction::Mirror => "mirror",
                }),
            );
            m.insert("R_cm".into(), json!(round6(r.intrinsic_radius)));
            m.insert("C_cm".into(), json!(round6(r.circumference)));
            m.insert("N".into(), json!(r.stitches));
            m.insert("dN".into(), json!(r.delta));
            m.insert("inc".into(), json!(r.increases));
            m.insert("dec".into(), json!(r.decreases));
            if let Some(offsets) = &r.theta_offsets {
                let rounded: Vec<f64> = offsets.iter().map(|&t| round6(t)).collect();
                m.insert("theta_offsets".into(), json!(rounded));
            }
            Value::Object(m)
        })
        .collect();
    let mut root = Map::new();
    root.insert("surface".into(), surface_value(pattern));
    root.insert(
        "gauge".into(),
        json!({
            "W_cm": round6(pattern.gauge.width()),
            "H_cm": round6(pattern.gauge.height()),
        }),
    );
    root.insert("rounds".into(), Value::Array(rounds));
    root.insert("total".into(), json!(pattern.total_stitches));
    root.insert("construction".into(), json!(pattern.construction.name()));
    if !pattern.notes.is_empty() {
        root.insert("notes".into(), json!(pattern.notes));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("static schema");
    s.push('\n');
    s
}

/// Stitch graph as JSON: nodes with round/idx/theta and optional 3D anchor,
/// then parent and lateral edges as index pairs.
pub fn export_graph(graph: &StitchGraph) -> String {
    let nodes: Vec<Value> = graph
        .nodes
        .iter()
        .map(|n| {
            let mut m = Map::new();
            m.insert("round".into(), json!(n.round));
            m.insert("idx".into(), json!(n.idx));
            m.insert("theta".into(), json!(round6(n.theta)));
            if let Some(p) = n.position {
                m.insert(
                    "xyz".into(),
                    json!([round6(p[0]), round6(p[1]), round6(p[2])]),
                );
            }
            Value::Object(m)
        })
        .collect();
    let mut root = Map::new();
    root.insert("nodes".into(), Value::Array(nodes));
    root.insert(
        "parent_edges".into(),
        json!(graph
            .parent_edges
            .iter()
            .map(|&(a, b)| [a, b])
            .collect::<Vec<_>>()),
    );
    root.insert(
        "lateral_edges".into(),
        json!(graph
            .lateral_edges
            .iter()
            .map(|&(a, b)| [a, b])
            .collect::<Vec<_>>()),
    );
    let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("static schema");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{build_stitch_graph, compile, CompileOptions, Gauge};
    use crate::surfaces::{Family, SurfaceSpec};

    fn disc(rounds: u32) -> Pattern {
        compile(
            &SurfaceSpec::new(Family::Disc, 1.0).unwrap(),
            &Gauge::new(0.5, 0.5).unwrap(),
            CompileOptions {
                rounds: Some(rounds),
                stop_radius: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn disc_round_two_body_is_frozen() {
        let p = disc(3);
        let text = render_text(&p);
        // 6 -> 13: one triple increase, five doubles, no trailing plain
        assert!(
            text.contains("Round 2 (13 sts, +7): (inc3) \u{d7}1, (inc) \u{d7}5, 0 sc"),
            "{text}"
        );
        // byte-for-byte reproducible
        assert_eq!(text, render_text(&p));
    }

    #[test]
    fn plain_round_renders_as_all_sc() {
        let mut p = disc(2);
        // force an unchanged second round
        p.rounds[1].increases.clear();
        p.rounds[1].delta = 0;
        p.rounds[1].stitches = 6;
        let text = render_text(&p);
        assert!(text.contains("Round 2 (6 sts, +0): 6 sc"), "{text}");
    }

    #[test]
    fn sphere_mirror_rounds_are_labelled() {
        let p = compile(
            &SurfaceSpec::new(Family::Sphere { radius: 1.0 }, 1.0).unwrap(),
            &Gauge::new(0.5, 0.5).unwrap(),
            CompileOptions::default(),
        )
        .unwrap();
        let text = render_text(&p);
        assert!(text.contains("[decrease]"), "{text}");
        assert!(text.contains("mirrored half"), "{text}");
    }

    #[test]
    fn richmond_sections_are_labelled() {
        let p = compile(
            &SurfaceSpec::new(
                Family::Richmond {
                    order: 1,
                    r_min: 0.3,
                    r_max: 2.0,
                },
                1.0,
            )
            .unwrap(),
            &Gauge::new(0.5, 0.4).unwrap(),
            CompileOptions::default(),
        )
        .unwrap();
        let text = render_text(&p);
        assert!(text.contains("-- outward: toward the rim --"));
        assert!(text.contains("-- inward: toward the planar edge --"));
    }

    #[test]
    fn csv_has_header_rounds_and_total() {
        let p = disc(3);
        let csv = render_csv(&p);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3 + 2);
        assert_eq!(lines[0], "\u{2113},delta_N,N");
        assert_eq!(lines[1], "1,,6"); // start round: blank delta
        assert_eq!(lines[2], "2,7,13");
        assert_eq!(lines[4], "total,,38");
        // total matches the pattern
        assert_eq!(p.total_stitches, 38);
    }

    #[test]
    fn csv_single_round_has_three_lines() {
        let p = disc(1);
        assert_eq!(render_csv(&p).lines().count(), 3);
    }

    #[test]
    fn json_is_stable_and_six_decimal() {
        let p = disc(2);
        let a = render_json(&p);
        assert_eq!(a, render_json(&p));
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["rounds"][0]["N"], 6);
        assert_eq!(v["rounds"][0]["dN"], 6);
        assert_eq!(v["construction"], "closed-rounds");
        assert_eq!(v["total"], 19);
        let c = v["rounds"][1]["C_cm"].as_f64().unwrap();
        assert!((c - round6(2.0 * std::f64::consts::PI)).abs() < 1e-12);
    }

    #[test]
    fn graph_export_round_trips_counts() {
        let p = disc(3);
        let g = build_stitch_graph(&p).unwrap();
        let s = export_graph(&g);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["nodes"].as_array().unwrap().len(), 38);
        assert_eq!(
            v["parent_edges"].as_array().unwrap().len(),
            g.parent_edges.len()
        );
        assert_eq!(
            v["lateral_edges"].as_array().unwrap().len(),
            g.lateral_edges.len()
        );
    }

    #[test]
    fn moebius_text_mentions_the_doubled_pass() {
        let p = compile(
            &SurfaceSpec::new(Family::MobiusRuled { half_width: 0.5 }, 3.0).unwrap(),
            &Gauge::new(0.5, 0.4).unwrap(),
            CompileOptions::default(),
        )
        .unwrap();
        let text = render_text(&p);
        assert!(text.contains("# the first edge round passes the centre row twice"));
    }
}

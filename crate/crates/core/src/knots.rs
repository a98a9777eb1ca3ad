//! Ropelength arithmetic and tube-length planning for crocheted or
//! spool-knitted knots.
//!
//! Ropelength is the length of a rope divided by its radius, so it is
//! dimensionless and scale-invariant. Simulated minima bound how short a
//! physical tube can be and still close into a given knot; only the trefoil
//! minimum ships built in, other bounds load from a user-supplied table.

use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

/// Simulated minimal ropelength of the trefoil.
pub const TREFOIL_MIN_ROPELENGTH: f64 = 32.74;
/// Sharpest theoretical lower bound for any non-trivial knot.
pub const ROPELENGTH_LOWER_BOUND: f64 = 31.32;
/// Extra tube length recommended per crossing beyond the trefoil, in cm.
pub const EXTRA_PER_CROSSING_CM: f64 = 10.0;

/// Environment variable naming a knot-table JSON file.
pub const KNOT_TABLE_ENV: &str = "CURVELACE_KNOT_TABLE";

#[derive(Debug, Error)]
pub enum KnotError {
    #[error("invalid dimensions: length and radius must be positive")]
    InvalidDimensions,
    #[error("no bound available for knot {0}")]
    NoBound(String),
    #[error("unknown knot {0}")]
    UnknownKnot(String),
    #[error("invalid knot entry {name}: {reason}")]
    InvalidEntry { name: String, reason: String },
    #[error("cannot read knot table: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse knot table: {0}")]
    Parse(#[from] serde_json::Error),
}

/// One catalog entry. `min_ropelength` is the simulated minimum when known.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub crossings: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_ropelength: Option<f64>,
}

impl KnotEntry {
    fn validate(&self) -> Result<(), KnotError> {
        if self.crossings < 3 {
            return Err(KnotError::InvalidEntry {
                name: self.name.clone(),
                reason: "a non-trivial knot has at least 3 crossings".into(),
            });
        }
        if let Some(rl) = self.min_ropelength {
            if rl.is_nan() || rl <= ROPELENGTH_LOWER_BOUND {
                return Err(KnotError::InvalidEntry {
                    name: self.name.clone(),
                    reason: format!(
                        "min_ropelength {rl} does not exceed the theoretical bound {ROPELENGTH_LOWER_BOUND}"
                    ),
                });
            }
        }
        Ok(())
    }
}

/// Immutable knot catalog: the built-in prime knots up to seven crossings,
/// optionally extended or overridden from a JSON file.
#[derive(Debug, Clone)]
pub struct KnotTable {
    entries: Vec<KnotEntry>,
}

impl KnotTable {
    /// Prime knots with seven or fewer crossings. Only the trefoil carries a
    /// ropelength bound out of the box.
    pub fn builtin() -> KnotTable {
        let mut entries = vec![KnotEntry {
            name: "3_1".into(),
            crossings: 3,
            min_ropelength: Some(TREFOIL_MIN_ROPELENGTH),
        }];
        let rest: [(&str, u32); 13] = [
            ("4_1", 4),
            ("5_1", 5),
            ("5_2", 5),
            ("6_1", 6),
            ("6_2", 6),
            ("6_3", 6),
            ("7_1", 7),
            ("7_2", 7),
            ("7_3", 7),
            ("7_4", 7),
            ("7_5", 7),
            ("7_6", 7),
            ("7_7", 7),
        ];
        entries.extend(rest.iter().map(|(n, c)| KnotEntry {
            name: (*n).into(),
            crossings: *c,
            min_ropelength: None,
        }));
        KnotTable { entries }
    }

    /// Built-in catalog merged with entries from a JSON array of
    /// `{name, crossings, min_ropelength?}`; file entries win on conflict.
    pub fn load(path: &Path) -> Result<KnotTable, KnotError> {
        let text = std::fs::read_to_string(path)?;
        let extra: Vec<KnotEntry> = serde_json::from_str(&text)?;
        let mut table = KnotTable::builtin();
        for e in extra {
            e.validate()?;
            match table.entries.iter_mut().find(|t| t.name == e.name) {
                Some(slot) => *slot = e,
                None => table.entries.push(e),
            }
        }
        Ok(table)
    }

    /// Catalog from the `CURVELACE_KNOT_TABLE` environment variable when
    /// set, the built-in table otherwise.
    pub fn from_env() -> Result<KnotTable, KnotError> {
        match std::env::var_os(KNOT_TABLE_ENV) {
            Some(p) => KnotTable::load(Path::new(&p)),
            None => Ok(KnotTable::builtin()),
        }
    }

    pub fn get(&self, name: &str) -> Result<&KnotEntry, KnotError> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| KnotError::UnknownKnot(name.into()))
    }

    pub fn entries(&self) -> &[KnotEntry] {
        &self.entries
    }
}

/// Ropelength of a tube: length divided by radius.
pub fn ropelength(length_cm: f64, radius_cm: f64) -> Result<f64, KnotError> {
    if length_cm.is_nan() || radius_cm.is_nan() || length_cm <= 0.0 || radius_cm <= 0.0 {
        return Err(KnotError::InvalidDimensions);
    }
    Ok(length_cm / radius_cm)
}

/// Shortest tube of the given diameter that can close into this knot:
/// the knot's minimal ropelength times the tube radius.
pub fn min_tube_length(knot: &KnotEntry, tube_diameter_cm: f64) -> Result<f64, KnotError> {
    if tube_diameter_cm.is_nan() || tube_diameter_cm <= 0.0 {
        return Err(KnotError::InvalidDimensions);
    }
    let rl = knot
        .min_ropelength
        .ok_or_else(|| KnotError::NoBound(knot.name.clone()))?;
    Ok(rl * tube_diameter_cm / 2.0)
}

/// Comfortable working length: twice the trefoil minimum for this diameter,
/// plus 10 cm per crossing beyond three. The add-on is quoted for an
/// 0.8 cm tube and is applied as written regardless of diameter.
pub fn recommended_length(knot: &KnotEntry, tube_diameter_cm: f64) -> Result<f64, KnotError> {
    if tube_diameter_cm.is_nan() || tube_diameter_cm <= 0.0 {
        return Err(KnotError::InvalidDimensions);
    }
    let trefoil = KnotEntry {
        name: "3_1".into(),
        crossings: 3,
        min_ropelength: Some(TREFOIL_MIN_ROPELENGTH),
    };
    let base = min_tube_length(&trefoil, tube_diameter_cm)?;
    Ok(2.0 * base + EXTRA_PER_CROSSING_CM * (knot.crossings.saturating_sub(3)) as f64)
}

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A finite coloring of the ground ring. Colors are `0..color_count()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ColoringSpec {
    /// `floor(x / width) mod colors`.
    Band { width: Rational, colors: u32 },
    /// `floor(x * 2^scale) mod modulus`.
    Residue { modulus: u32, scale: u32 },
    /// Explicit colors on a finite set of points; other points are
    /// uncolored and never part of a witness.
    Table {
        colors: u32,
        entries: BTreeMap<Rational, u32>,
    },
}

impl ColoringSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            ColoringSpec::Band { width, colors } => {
                if !width.is_positive() {
                    return Err(Error::InvalidColoring("band width must be positive".into()));
                }
                if *colors == 0 {
                    return Err(Error::InvalidColoring("need at least one color".into()));
                }
            }
            ColoringSpec::Residue { modulus, .. } => {
                if *modulus == 0 {
                    return Err(Error::InvalidColoring("modulus must be positive".into()));
                }
            }
            ColoringSpec::Table { colors, entries } => {
                if let Some((x, c)) = entries.iter().find(|(_, c)| **c >= *colors) {
                    return Err(Error::InvalidColoring(format!(
                        "entry {x} has color {c}, only {colors} colors declared"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn color_count(&self) -> u32 {
        match self {
            ColoringSpec::Band { colors, .. } | ColoringSpec::Table { colors, .. } => *colors,
            ColoringSpec::Residue { modulus, .. } => *modulus,
        }
    }

    pub fn color(&self, x: &Rational) -> Option<u32> {
        let reduce = |n: BigInt, m: u32| n.mod_floor(&BigInt::from(m)).to_u32();
        match self {
            ColoringSpec::Band { width, colors } => reduce((x / width).floor(), *colors),
            ColoringSpec::Residue { modulus, scale } => {
                reduce((x * &pow2(*scale)).floor(), *modulus)
            }
            ColoringSpec::Table { entries, .. } => entries.get(x).copied(),
        }
    }
}

fn pow2(j: u32) -> Rational {
    Rational::from_integer(BigInt::from(1) << j)
}

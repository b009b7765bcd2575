//! Connected graphs with `λ ≤ 2` and their `Γ` formulas.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Perron;
use crate::error::{Error, Result};
use crate::graphs::{build, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Path,
    D,
    Cycle,
    Dhat,
    E6,
    E7,
    E8,
    E6hat,
    E7hat,
    E8hat,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Path,
        Family::D,
        Family::Cycle,
        Family::Dhat,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::E6hat,
        Family::E7hat,
        Family::E8hat,
    ];

    /// Smallest valid order, and the only one for sporadic graphs.
    pub fn min_n(self) -> usize {
        match self {
            Family::Path => 1,
            Family::D => 4,
            Family::Cycle => 3,
            Family::Dhat => 5,
            Family::E6 => 6,
            Family::E7 | Family::E6hat => 7,
            Family::E8 | Family::E7hat => 8,
            Family::E8hat => 9,
        }
    }

    pub fn is_sporadic(self) -> bool {
        !matches!(self, Family::Path | Family::D | Family::Cycle | Family::Dhat)
    }

    /// Arm lengths of the sporadic three-armed trees.
    fn arms(self) -> Option<[usize; 3]> {
        match self {
            Family::E6 => Some([1, 2, 2]),
            Family::E7 => Some([1, 2, 3]),
            Family::E8 => Some([1, 2, 4]),
            Family::E6hat => Some([2, 2, 2]),
            Family::E7hat => Some([1, 3, 3]),
            Family::E8hat => Some([1, 2, 5]),
            _ => None,
        }
    }

    fn check_n(self, n: usize) -> Result<()> {
        let ok = if self.is_sporadic() { n == self.min_n() } else { n >= self.min_n() };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("n = {n} is not valid for {self}")))
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Path => "P",
            Family::D => "D",
            Family::Cycle => "C",
            Family::Dhat => "Dhat",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::E6hat => "E6hat",
            Family::E7hat => "E7hat",
            Family::E8hat => "E8hat",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// The `n`-vertex member of a family.
pub fn family_graph(family: Family, n: usize) -> Result<Graph> {
    family.check_n(n)?;
    let g = match family {
        Family::Path => build::path(n),
        Family::Cycle => build::cycle(n),
        Family::D => build::attach_path(&build::star(3), 0, n - 3)?,
        Family::Dhat => {
            let mut g = build::path(n - 4);
            for end in [0, n - 5] {
                for _ in 0..2 {
                    let w = g.add_vertex()?;
                    g.add_edge(end, w)?;
                }
            }
            g
        }
        _ => {
            let mut g = Graph::empty(1)?;
            for arm in family.arms().expect("sporadic") {
                g = build::attach_path(&g, 0, arm)?;
            }
            g
        }
    };
    Ok(g)
}

/// Float value of `Γ` from the family formula. The three `E_k` trees have no
/// closed form and are evaluated from their certified enclosure.
pub fn gamma_family_closed_form(family: Family, n: usize) -> Result<f64> {
    family.check_n(n)?;
    let nf = n as f64;
    Ok(match family {
        Family::Path => {
            let a = PI / (nf + 1.0);
            2.0 / (nf + 1.0) * (a.sin() / (1.0 - a.cos())).powi(2)
        }
        Family::D => {
            let a = PI / (2.0 * (nf - 1.0));
            1.0 / (2.0 * (nf - 1.0)) * (1.0 + a.sin() / (1.0 - a.cos())).powi(2)
        }
        Family::Cycle => nf,
        Family::Dhat => (nf - 2.0).powi(2) / (nf - 3.0),
        Family::E6hat => 6.0,
        Family::E7hat => 6.75,
        Family::E8hat => 7.5,
        Family::E6 | Family::E7 | Family::E8 => {
            let p = Perron::new(&family_graph(family, n)?)?;
            p.gamma_enclosure(&crate::algebra::interval::dyadic_eps(50)).mid_f64()
        }
    })
}

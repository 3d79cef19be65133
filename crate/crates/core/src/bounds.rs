//! Closed-form bounds on the plane-projecting dimension and on edge counts,
//! evaluated in exact integer arithmetic.

use std::fmt;

use num_integer::Roots;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Lower => "LOWER",
            BoundKind::Upper => "UPPER",
            BoundKind::Exact => "EXACT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub quantity: String,
    pub value: u64,
    pub kind: BoundKind,
    pub source: &'static str,
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadInput(msg()))
    }
}

fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

pub fn ceil_sqrt(x: u64) -> u64 {
    let s = x.sqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

/// Smallest `d` with `C(d, 2) >= r`: at least this many axes are needed to
/// offer `r` distinct planes.
pub fn pdim_lower_from_thickness(r: u64) -> Result<u64> {
    need(r >= 1, || format!("thickness must be at least 1, got {r}"))?;
    Ok((2..).find(|&d| choose2(d) >= r).expect("choose2 is unbounded"))
}

pub fn pdim_upper_from_thickness(r: u64) -> Result<u64> {
    need(r >= 1, || format!("thickness must be at least 1, got {r}"))?;
    Ok(2 * r)
}

pub fn pdim_upper_from_geom_thickness(s: u64) -> Result<u64> {
    need(s >= 1, || format!("geometric thickness must be at least 1, got {s}"))?;
    Ok(2 * ceil_sqrt(s))
}

/// Thickness of `K_n`.
pub fn thickness_kn(n: u64) -> Result<u64> {
    need(n >= 1, || format!("n must be at least 1, got {n}"))?;
    Ok(match n {
        1..=4 => 1,
        5..=8 => 2,
        9..=10 => 3,
        _ => (n + 2).div_ceil(6),
    })
}

/// Smallest `d` with `(2d - 1)^2 >= 2n + 7`.
pub fn pdim_upper_kn(n: u64) -> Result<u64> {
    need(n >= 1, || format!("n must be at least 1, got {n}"))?;
    Ok((1..).find(|&d: &u64| (2 * d - 1).pow(2) >= 2 * n + 7).expect("unbounded"))
}

pub fn pdim_lower_kn(n: u64) -> Result<u64> {
    pdim_lower_from_thickness(thickness_kn(n)?)
}

pub fn max_edges_two_planes(n: u64) -> Result<u64> {
    need(n >= 3, || format!("n must be at least 3, got {n}"))?;
    Ok(6 * n - 15)
}

pub fn max_edges_three_planes(n: u64) -> Result<u64> {
    need(n >= 3, || format!("n must be at least 3, got {n}"))?;
    Ok(9 * n - 24)
}

pub fn pdim_upper_from_max_degree(delta: u64) -> Result<u64> {
    need(delta >= 1, || format!("maximum degree must be at least 1, got {delta}"))?;
    Ok(2 * delta.div_ceil(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundQuery {
    KnUpper,
    KnLower,
    KnThickness,
    TwoPlaneMax,
    ThreePlaneMax,
    FromThickness,
    FromGeomThickness,
    FromMaxDegree,
}

impl BoundQuery {
    pub const ALL: [BoundQuery; 8] = [
        BoundQuery::KnUpper,
        BoundQuery::KnLower,
        BoundQuery::KnThickness,
        BoundQuery::TwoPlaneMax,
        BoundQuery::ThreePlaneMax,
        BoundQuery::FromThickness,
        BoundQuery::FromGeomThickness,
        BoundQuery::FromMaxDegree,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundQuery::KnUpper => "kn-upper",
            BoundQuery::KnLower => "kn-lower",
            BoundQuery::KnThickness => "kn-thickness",
            BoundQuery::TwoPlaneMax => "two-plane-max",
            BoundQuery::ThreePlaneMax => "three-plane-max",
            BoundQuery::FromThickness => "from-thickness",
            BoundQuery::FromGeomThickness => "from-geom-thickness",
            BoundQuery::FromMaxDegree => "from-max-degree",
        }
    }

    pub fn evaluate(&self, value: u64) -> Result<BoundReport> {
        let (quantity, v, kind, source) = match self {
            BoundQuery::KnUpper => (
                format!("pdim(K_{value})"),
                pdim_upper_kn(value)?,
                BoundKind::Upper,
                "complete graphs: convex-position layout with Hamiltonian path decomposition, ceil((sqrt(2n+7)+1)/2)",
            ),
            BoundQuery::KnLower => (
                format!("pdim(K_{value})"),
                pdim_lower_kn(value)?,
                BoundKind::Lower,
                "complete graphs: thickness of K_n must fit in C(d,2) planes",
            ),
            BoundQuery::KnThickness => (
                format!("thickness(K_{value})"),
                thickness_kn(value)?,
                BoundKind::Exact,
                "known thickness of K_n: 1, 2, 3 for n <= 4, 8, 10; ceil((n+2)/6) beyond",
            ),
            BoundQuery::TwoPlaneMax => (
                format!("max |E| on {value} vertices, two planes sharing an axis"),
                max_edges_two_planes(value)?,
                BoundKind::Upper,
                "two orthogonal planes: at most 6n-15 edges, attained for every n >= 14",
            ),
            BoundQuery::ThreePlaneMax => (
                format!("max |E| on {value} vertices, three planes in R^3"),
                max_edges_three_planes(value)?,
                BoundKind::Upper,
                "three coordinate planes of R^3: at most 9n-24 edges",
            ),
            BoundQuery::FromThickness => (
                format!("pdim for thickness {value}"),
                pdim_lower_from_thickness(value)?,
                BoundKind::Lower,
                "thickness r satisfies r <= C(pdim, 2); upper bound is 2r",
            ),
            BoundQuery::FromGeomThickness => (
                format!("pdim for geometric thickness {value}"),
                pdim_upper_from_geom_thickness(value)?,
                BoundKind::Upper,
                "geometric thickness s lifts to dimension 2*ceil(sqrt(s))",
            ),
            BoundQuery::FromMaxDegree => (
                format!("pdim for maximum degree {value}"),
                pdim_upper_from_max_degree(value)?,
                BoundKind::Upper,
                "thickness at most ceil(D/2) gives pdim at most 2*ceil(D/2)",
            ),
        };
        Ok(BoundReport { quantity, value: v, kind, source })
    }
}

impl std::str::FromStr for BoundQuery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundQuery::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::BadInput(format!("unknown bound query {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(pdim_lower_from_thickness(1).unwrap(), 2);
        assert_eq!(pdim_lower_from_thickness(3).unwrap(), 3);
        assert_eq!(pdim_lower_from_thickness(7).unwrap(), 5);
        assert!(pdim_lower_from_thickness(0).is_err());
        assert_eq!(pdim_upper_from_thickness(1).unwrap(), 2);
        assert_eq!(pdim_upper_from_thickness(3).unwrap(), 6);
        assert_eq!(pdim_upper_from_thickness(10).unwrap(), 20);
        assert_eq!(pdim_upper_from_geom_thickness(1).unwrap(), 2);
        assert_eq!(pdim_upper_from_geom_thickness(2).unwrap(), 4);
        assert_eq!(pdim_upper_from_geom_thickness(9).unwrap(), 6);
        assert_eq!(thickness_kn(8).unwrap(), 2);
        assert_eq!(thickness_kn(9).unwrap(), 3);
        assert_eq!(thickness_kn(17).unwrap(), 4);
        assert_eq!(pdim_upper_kn(14).unwrap(), 4);
        assert_eq!(pdim_upper_kn(1).unwrap(), 2);
        assert_eq!(pdim_upper_kn(100).unwrap(), 8);
        assert_eq!(pdim_lower_kn(11).unwrap(), 3);
        assert_eq!(pdim_lower_kn(4).unwrap(), 2);
        assert_eq!(pdim_lower_kn(30).unwrap(), 4);
        assert_eq!(max_edges_two_planes(14).unwrap(), 69);
        assert_eq!(max_edges_two_planes(3).unwrap(), 3);
        assert_eq!(max_edges_two_planes(20).unwrap(), 105);
        assert!(max_edges_two_planes(2).is_err());
        assert_eq!(max_edges_three_planes(3).unwrap(), 3);
        assert_eq!(max_edges_three_planes(10).unwrap(), 66);
        assert_eq!(max_edges_three_planes(24).unwrap(), 192);
        assert_eq!(pdim_upper_from_max_degree(5).unwrap(), 6);
        assert_eq!(pdim_upper_from_max_degree(6).unwrap(), 6);
        assert_eq!(pdim_upper_from_max_degree(1).unwrap(), 2);
    }

    #[test]
    fn ceil_sqrt_small() {
        let got: Vec<u64> = (0..=10).map(ceil_sqrt).collect();
        assert_eq!(got, vec![0, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn improvement_over_sqrt_n() {
        for n in [16, 36, 64, 100] {
            assert!(pdim_upper_kn(n).unwrap() <= ceil_sqrt(n));
        }
    }

    #[test]
    fn query_names_round_trip() {
        for q in BoundQuery::ALL {
            assert_eq!(q.name().parse::<BoundQuery>().unwrap(), q);
        }
        assert_eq!(BoundQuery::TwoPlaneMax.evaluate(14).unwrap().value, 69);
        assert!("nope".parse::<BoundQuery>().is_err());
    }
}

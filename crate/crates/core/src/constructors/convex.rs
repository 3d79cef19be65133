//! Points whose projections onto every coordinate plane are in strictly
//! convex position with one common cyclic order.

use crate::constructors::trig::unit;
use crate::error::{Error, Result};
use crate::geometry::{convex_cyclic_order, ratio, Rational};
use crate::projection::{project, Embedding, PlanePair};

pub(crate) const MAX_PRECISION_BITS: u64 = 1 << 12;

/// Lifts planar model points to `R^d`: axis `j` reads the model point
/// against direction `(cos(j pi/2d), -sin(j pi/2d))`. Each coordinate plane
/// is then an invertible linear image of the model.
pub(crate) struct Lift {
    dirs: Vec<(Rational, Rational)>,
}

impl Lift {
    pub(crate) fn new(dimension: usize, precision: u64) -> Lift {
        let dirs = (0..dimension)
            .map(|j| {
                let (c, s) = unit(&ratio(j as i64, 2 * dimension as i64), precision);
                (c, -s)
            })
            .collect();
        Lift { dirs }
    }

    pub(crate) fn apply(&self, x: &Rational, y: &Rational) -> Vec<Rational> {
        self.dirs.iter().map(|(a, b)| x * a + y * b).collect()
    }
}

fn candidate(n: usize, d: usize, precision: u64) -> Result<Embedding> {
    let lift = Lift::new(d, precision);
    let coords = (0..n)
        .map(|k| {
            let (c, s) = unit(&ratio(2 * k as i64, n as i64), precision);
            lift.apply(&c, &s)
        })
        .collect();
    Embedding::new(d, coords)
}

fn all_planes_convex_alike(e: &Embedding) -> Result<bool> {
    let mut first: Option<Vec<usize>> = None;
    for plane in PlanePair::all(e.dimension()) {
        let Some(order) = convex_cyclic_order(&project(e, plane)?)? else {
            return Ok(false);
        };
        match &first {
            None => first = Some(order),
            Some(f) if *f != order => return Ok(false),
            Some(_) => {}
        }
    }
    Ok(true)
}

/// `n` points in `R^d` (coordinate `j` of point `k` approximates
/// `cos(2 pi k/n + j pi/2d)`), refined until every plane projection is
/// strictly convex with the same cyclic order.
pub fn convex_projection_points(n: usize, d: usize) -> Result<Embedding> {
    if n < 3 || d < 2 {
        return Err(Error::BadInput(format!("need n >= 3 and d >= 2, got n = {n}, d = {d}")));
    }
    let mut precision = 16;
    while precision <= MAX_PRECISION_BITS {
        if let Ok(e) = candidate(n, d, precision) {
            if all_planes_convex_alike(&e)? {
                return Ok(e);
            }
        }
        precision *= 2;
    }
    Err(Error::ConstructionFailed(format!(
        "no convex configuration for n = {n}, d = {d} up to {MAX_PRECISION_BITS} bits"
    )))
}

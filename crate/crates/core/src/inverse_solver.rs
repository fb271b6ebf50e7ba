//! Inversion of the sharp-cutoff photon count
//! `N = C/n_liquid³ · (n_out - n_in)² n_out² / n_in`, `C = (KR)³/(9π)`,
//! for whichever refractive index is unknown.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{require_positive, Error, Result};

/// Which index is held fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "side", content = "value", rename_all = "snake_case")]
pub enum KnownIndex {
    NIn(f64),
    NOut(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InversionProblem {
    n_target: f64,
    known: KnownIndex,
    n_liquid: f64,
    kr_observed: f64,
}

/// Closed-form asymptotic estimates of n_in at given n_out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchApproximations {
    /// Small n_in: `C' n_out⁴ / N`.
    pub near_origin: f64,
    /// Small n_out: `N / (C' n_out²)`.
    pub near_axis: f64,
    /// `n_out + √(N / (C' n_out))`
    pub near_diagonal_plus: f64,
    /// `n_out - √(N / (C' n_out))`; may be negative outside its region.
    pub near_diagonal_minus: f64,
}

const SEARCH_LO: f64 = 1e-6;
const SEARCH_HI: f64 = 1e9;
const GRID_POINTS: usize = 1501;
const ROOT_REL_TOL: f64 = 1e-12;

impl InversionProblem {
    pub fn new(n_target: f64, known: KnownIndex, n_liquid: f64, kr_observed: f64) -> Result<Self> {
        require_positive("n_target", n_target)?;
        match known {
            KnownIndex::NIn(v) => require_positive("n_in", v)?,
            KnownIndex::NOut(v) => require_positive("n_out", v)?,
        };
        require_positive("n_liquid", n_liquid)?;
        require_positive("kr_observed", kr_observed)?;
        Ok(Self {
            n_target,
            known,
            n_liquid,
            kr_observed,
        })
    }

    pub fn n_target(&self) -> f64 {
        self.n_target
    }

    pub fn known(&self) -> KnownIndex {
        self.known
    }

    pub fn n_liquid(&self) -> f64 {
        self.n_liquid
    }

    pub fn kr_observed(&self) -> f64 {
        self.kr_observed
    }

    /// `(KR)³/(9π)`; about 119.4 at KR = 15.
    pub fn prefactor(&self) -> f64 {
        self.kr_observed.powi(3) / (9.0 * PI)
    }

    /// Prefactor with the liquid index folded in.
    pub fn effective_prefactor(&self) -> f64 {
        self.prefactor() / self.n_liquid.powi(3)
    }

    /// Photon count for a given pair of indices.
    pub fn forward_count(&self, n_in: f64, n_out: f64) -> f64 {
        let d = n_out - n_in;
        self.effective_prefactor() * d * d * n_out * n_out / n_in
    }
}

/// Both n_in roots, ascending, for known n_out.
///
/// The discriminant `N (4 C' n_out³ + N)` is positive for any positive
/// input, and the roots multiply to `n_out²`, so there are always two.
pub fn solve_n_in(problem: &InversionProblem) -> Result<[f64; 2]> {
    let KnownIndex::NOut(n_out) = problem.known else {
        return Err(Error::InvalidParameter {
            name: "known",
            value: f64::NAN,
            reason: "solve_n_in needs n_out as the known index",
        });
    };
    let n = problem.n_target;
    let a = problem.effective_prefactor() * n_out * n_out;
    // a x² - (2 a n_out + N) x + a n_out² = 0
    let b = 2.0 * a * n_out + n;
    let disc = n * (4.0 * a * n_out + n);
    if !(disc >= 0.0) || !disc.is_finite() {
        return Err(Error::NoSolution {
            target: n,
            min_achievable: 0.0,
        });
    }
    let q = 0.5 * (b + disc.sqrt());
    let large = q / a;
    let small = a * n_out * n_out / q;
    if !(small > 0.0 && large.is_finite()) {
        return Err(Error::NoSolution {
            target: n,
            min_achievable: 0.0,
        });
    }
    Ok([small, large])
}

/// All positive n_out roots in `[1e-6, 1e9]`, ascending.
///
/// One root always lies above n_in; two more lie below it when
/// `C' n_in³ ≥ 16 N`. A tangent double root may be missed.
pub fn solve_n_out(problem: &InversionProblem) -> Result<Vec<f64>> {
    let KnownIndex::NIn(n_in) = problem.known else {
        return Err(Error::InvalidParameter {
            name: "known",
            value: f64::NAN,
            reason: "solve_n_out needs n_in as the known index",
        });
    };
    let cp = problem.effective_prefactor();
    let rhs = problem.n_target * n_in;
    let f = |y: f64| {
        let d = y - n_in;
        cp * d * d * y * y - rhs
    };

    let mut grid: Vec<f64> = (0..GRID_POINTS)
        .map(|i| SEARCH_LO * (SEARCH_HI / SEARCH_LO).powf(i as f64 / (GRID_POINTS - 1) as f64))
        .collect();
    // n_in is a double zero of the polynomial part and n_in/2 its interior maximum
    for extra in [0.5 * n_in, n_in] {
        if (SEARCH_LO..=SEARCH_HI).contains(&extra) {
            grid.push(extra);
        }
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();

    let mut roots = Vec::new();
    let mut prev = (grid[0], f(grid[0]));
    for &x in &grid[1..] {
        let fx = f(x);
        if fx == 0.0 {
            roots.push(x);
        } else if prev.1 != 0.0 && prev.1.signum() != fx.signum() {
            roots.push(refine(&f, prev.0, x, prev.1));
        }
        prev = (x, fx);
    }
    if roots.is_empty() {
        return Err(Error::NoSolution {
            target: problem.n_target,
            min_achievable: 0.0,
        });
    }
    Ok(roots)
}

fn refine(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut f_lo: f64) -> f64 {
    // bisection to the target width
    while hi - lo > ROOT_REL_TOL * hi.abs() {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    // secant polish, kept inside the bracket
    let (mut x0, mut x1) = (lo, hi);
    let (mut f0, mut f1) = (f_lo, f(hi));
    for _ in 0..4 {
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !(x2 >= lo && x2 <= hi) {
            break;
        }
        let f2 = f(x2);
        if f2.abs() >= f1.abs().min(f0.abs()) {
            break;
        }
        (x0, f0, x1, f1) = (x1, f1, x2, f2);
    }
    if f1.abs() <= f0.abs() {
        x1
    } else {
        x0
    }
}

/// Asymptotic n_in estimates at `n_out`.
pub fn branch_approximations(
    problem: &InversionProblem,
    n_out: f64,
) -> Result<BranchApproximations> {
    require_positive("n_out", n_out)?;
    let cp = problem.effective_prefactor();
    let n = problem.n_target;
    let s = (n / (cp * n_out)).sqrt();
    Ok(BranchApproximations {
        near_origin: cp * n_out.powi(4) / n,
        near_axis: n / (cp * n_out * n_out),
        near_diagonal_plus: n_out + s,
        near_diagonal_minus: n_out - s,
    })
}

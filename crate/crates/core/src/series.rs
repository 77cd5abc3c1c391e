//! Exact arithmetic in `F[u, v] / (u², v²)`.
//!
//! The dot operators on a graded Young module square to zero, so every power
//! series in two adjacent dots truncates to the four coefficients of
//! `1, u, v, uv`.  This module provides that quotient ring together with the
//! specific series `p_r` and `q_r` driving the intertwiner action, for both
//! the degenerate (`ξ = 1`) and non-degenerate parameter regimes.

use crate::{scalar, Error, Result, Scalar};
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `c[0] + c[1]·u + c[2]·v + c[3]·uv` with `u² = v² = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Truncated {
    pub c: [Scalar; 4],
}

impl Truncated {
    pub fn new(c: [Scalar; 4]) -> Self {
        Truncated { c }
    }

    pub fn constant(s: Scalar) -> Self {
        Truncated::new([s, Scalar::zero(), Scalar::zero(), Scalar::zero()])
    }

    pub fn zero() -> Self {
        Truncated::constant(Scalar::zero())
    }

    pub fn one() -> Self {
        Truncated::constant(Scalar::one())
    }

    pub fn u() -> Self {
        Truncated::new([Scalar::zero(), Scalar::one(), Scalar::zero(), Scalar::zero()])
    }

    pub fn v() -> Self {
        Truncated::new([Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::zero()])
    }

    pub fn constant_term(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn is_unit(&self) -> bool {
        !self.c[0].is_zero()
    }

    /// Exact inverse.  With `s = c₀(1 + n)` and `n` nilpotent of order 3,
    /// `s⁻¹ = (1 − n + n²)/c₀`.
    pub fn invert(&self) -> Result<Truncated> {
        if !self.is_unit() {
            return Err(Error::DivisionByNonUnit(format!(
                "{self} has zero constant term"
            )));
        }
        let c0 = &self.c[0];
        let n = Truncated::new([
            Scalar::zero(),
            &self.c[1] / c0,
            &self.c[2] / c0,
            &self.c[3] / c0,
        ]);
        let n2 = &n * &n;
        let inv = &(&Truncated::one() - &n) + &n2;
        Ok(inv.scale(&(Scalar::one() / c0)))
    }

    pub fn scale(&self, s: &Scalar) -> Truncated {
        Truncated::new([&self.c[0] * s, &self.c[1] * s, &self.c[2] * s, &self.c[3] * s])
    }
}

impl Add for &Truncated {
    type Output = Truncated;
    fn add(self, rhs: &Truncated) -> Truncated {
        Truncated::new([
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        ])
    }
}

impl Sub for &Truncated {
    type Output = Truncated;
    fn sub(self, rhs: &Truncated) -> Truncated {
        Truncated::new([
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        ])
    }
}

impl Mul for &Truncated {
    type Output = Truncated;
    fn mul(self, rhs: &Truncated) -> Truncated {
        let (a, b) = (&self.c, &rhs.c);
        Truncated::new([
            &a[0] * &b[0],
            &(&a[0] * &b[1]) + &(&a[1] * &b[0]),
            &(&a[0] * &b[2]) + &(&a[2] * &b[0]),
            &(&(&a[0] * &b[3]) + &(&a[3] * &b[0])) + &(&(&a[1] * &b[2]) + &(&a[2] * &b[1])),
        ])
    }
}

impl Neg for &Truncated {
    type Output = Truncated;
    fn neg(self) -> Truncated {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Truncated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}u + {}v + {}uv",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

/// The deformation parameter: either the degenerate point or a nonzero,
/// non-root-of-unity rational (exercised at a generic rational value).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Parameter {
    Degenerate,
    Generic(Scalar),
}

impl Parameter {
    /// A generic value for quick constructions: `ξ = 2`.
    pub fn generic_default() -> Self {
        Parameter::Generic(scalar(2))
    }

    pub fn validate(&self) -> Result<()> {
        if let Parameter::Generic(x) = self {
            if x.is_zero() || x.is_one() || (-x.clone()).is_one() {
                return Err(Error::Precondition(format!(
                    "generic parameter must avoid 0 and ±1, got {x}"
                )));
            }
        }
        Ok(())
    }

    /// `ξ^k` for any integer `k` (generic), unused exponent in the
    /// degenerate case returns 1.
    pub fn power(&self, k: i64) -> Scalar {
        match self {
            Parameter::Degenerate => Scalar::one(),
            Parameter::Generic(x) => {
                let mut out = Scalar::one();
                for _ in 0..k.unsigned_abs() {
                    out = &out * x;
                }
                if k < 0 {
                    out = Scalar::one() / out;
                }
                out
            }
        }
    }

    /// The quantum integer `[n]`: `n` at the degenerate point, else
    /// `(ξⁿ − 1)/(ξ − 1)`.
    pub fn quantum_int(&self, n: i64) -> Scalar {
        match self {
            Parameter::Degenerate => scalar(n),
            Parameter::Generic(x) => {
                (self.power(n) - Scalar::one()) / (x - &Scalar::one())
            }
        }
    }
}

/// The series `N` at adjacent residues `(i_r, i_{r+1})`, with `u, v` standing
/// for the dots at positions `r, r+1`.
pub fn series_n(xi: &Parameter, ir: i64, ir1: i64) -> Truncated {
    match xi {
        Parameter::Degenerate => {
            // (v + i_{r+1} + 1) − (u + i_r)
            &(&Truncated::constant(scalar(ir1 + 1 - ir)) - &Truncated::u()) + &Truncated::v()
        }
        Parameter::Generic(_) => {
            // ξ^{i_r}(1 − u) − ξ^{i_{r+1}+1}(1 − v)
            let a = (&Truncated::one() - &Truncated::u()).scale(&xi.power(ir));
            let b = (&Truncated::one() - &Truncated::v()).scale(&xi.power(ir1 + 1));
            &a - &b
        }
    }
}

/// The series `D` at adjacent residues `(i_r, i_{r+1})`; a unit iff the
/// residues differ.
pub fn series_d(xi: &Parameter, ir: i64, ir1: i64) -> Truncated {
    match xi {
        Parameter::Degenerate => {
            &(&Truncated::constant(scalar(ir1 - ir)) - &Truncated::u()) + &Truncated::v()
        }
        Parameter::Generic(_) => {
            let a = (&Truncated::one() - &Truncated::u()).scale(&xi.power(ir));
            let b = (&Truncated::one() - &Truncated::v()).scale(&xi.power(ir1));
            &a - &b
        }
    }
}

/// `p_r` as a function of the two adjacent residues: `1` on equal residues,
/// otherwise `1 − N/D`.
pub fn series_p(xi: &Parameter, ir: i64, ir1: i64) -> Result<Truncated> {
    if ir == ir1 {
        return Ok(Truncated::one());
    }
    let n = series_n(xi, ir, ir1);
    let d = series_d(xi, ir, ir1).invert()?;
    Ok(&Truncated::one() - &(&n * &d))
}

/// `q_r` as a function of the two adjacent residues:
/// `ξ^{−i_r}·N` on equal residues, `N/D` when they differ by more than one,
/// `N/D²` at `i_r = i_{r+1} − 1` and the constant `ξ^{i_r}` at
/// `i_r = i_{r+1} + 1`.
pub fn series_q(xi: &Parameter, ir: i64, ir1: i64) -> Result<Truncated> {
    let n = series_n(xi, ir, ir1);
    if ir == ir1 {
        return Ok(n.scale(&xi.power(-ir)));
    }
    if ir == ir1 + 1 {
        return Ok(Truncated::constant(xi.power(ir)));
    }
    let d_inv = series_d(xi, ir, ir1).invert()?;
    if ir == ir1 - 1 {
        Ok(&(&n * &d_inv) * &d_inv)
    } else {
        Ok(&n * &d_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn ring_axioms_and_truncation() {
        let u = Truncated::u();
        let v = Truncated::v();
        assert_eq!(&u * &u, Truncated::zero());
        assert_eq!(&v * &v, Truncated::zero());
        assert_eq!(&u * &v, &v * &u);
        let s = Truncated::new([scalar(2), scalar(3), scalar(-1), ratio(1, 2)]);
        let t = Truncated::new([scalar(1), scalar(0), scalar(5), scalar(7)]);
        // Distributivity spot check.
        let lhs = &s * &(&t + &u);
        let rhs = &(&s * &t) + &(&s * &u);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inversion_is_exact() {
        let s = Truncated::new([scalar(2), scalar(3), scalar(-1), ratio(1, 2)]);
        let inv = s.invert().unwrap();
        assert_eq!(&s * &inv, Truncated::one());
        assert_eq!(&inv * &s, Truncated::one());
        let n = Truncated::new([scalar(0), scalar(1), scalar(2), scalar(3)]);
        assert!(matches!(n.invert(), Err(Error::DivisionByNonUnit(_))));
    }

    #[test]
    fn quantum_integers() {
        let deg = Parameter::Degenerate;
        assert_eq!(deg.quantum_int(-2), scalar(-2));
        let gen = Parameter::generic_default();
        assert_eq!(gen.quantum_int(0), scalar(0));
        assert_eq!(gen.quantum_int(1), scalar(1));
        assert_eq!(gen.quantum_int(3), scalar(7)); // 1 + 2 + 4
        assert_eq!(gen.quantum_int(-1), ratio(-1, 2)); // (1/2 − 1)/(2 − 1)
    }

    #[test]
    fn degenerate_constant_terms_match_worked_values() {
        let xi = Parameter::Degenerate;
        // i_r − i_{r+1} = −2: p has constant term −1/2 and q has 3/2.
        let p = series_p(&xi, 0, 2).unwrap();
        let q = series_q(&xi, 0, 2).unwrap();
        assert_eq!(*p.constant_term(), ratio(-1, 2));
        assert_eq!(*q.constant_term(), ratio(3, 2));
        // Equal residues: p is exactly 1 (not merely constant term 1).
        assert_eq!(series_p(&xi, 5, 5).unwrap(), Truncated::one());
        // i_r = i_{r+1} + 1: q is exactly the constant 1.
        assert_eq!(series_q(&xi, 3, 2).unwrap(), Truncated::one());
    }

    #[test]
    fn constant_terms_follow_quantum_reciprocals() {
        // At zero dots: p → 1/[i_r − i_{r+1}] and q → 1 − 1/[i_r − i_{r+1}]
        // whenever the residues differ by more than one.
        for xi in [Parameter::Degenerate, Parameter::generic_default()] {
            for (ir, ir1) in [(0i64, 2i64), (0, 3), (4, 0), (-1, 2), (3, -2)] {
                let gap = ir - ir1;
                assert!(gap.abs() > 1);
                let inv = Scalar::one() / xi.quantum_int(gap);
                let p = series_p(&xi, ir, ir1).unwrap();
                let q = series_q(&xi, ir, ir1).unwrap();
                assert_eq!(*p.constant_term(), inv, "p at ({ir},{ir1})");
                assert_eq!(*q.constant_term(), Scalar::one() - &inv, "q at ({ir},{ir1})");
            }
        }
    }

    #[test]
    fn division_requires_distinct_residues() {
        // D has zero constant term on equal residues; p and q avoid the
        // division there, but inverting D directly reports the non-unit.
        for xi in [Parameter::Degenerate, Parameter::generic_default()] {
            let d = series_d(&xi, 1, 1);
            assert!(d.constant_term().is_zero());
            assert!(d.invert().is_err());
            assert!(series_p(&xi, 1, 1).is_ok());
            assert!(series_q(&xi, 1, 1).is_ok());
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(Parameter::Degenerate.validate().is_ok());
        assert!(Parameter::generic_default().validate().is_ok());
        assert!(Parameter::Generic(ratio(-3, 2)).validate().is_ok());
        assert!(Parameter::Generic(scalar(0)).validate().is_err());
        assert!(Parameter::Generic(scalar(1)).validate().is_err());
        assert!(Parameter::Generic(scalar(-1)).validate().is_err());
    }
}

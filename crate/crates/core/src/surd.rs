//! Exact arithmetic with quadratic irrationals.
//!
//! Two layers:
//! * [`QuadraticSurd`] — a value `(p + √d)/q` with the classical integer
//!   expansion state machine (eventually periodic partial quotients).
//! * [`QuadExpr`] — a value `a + b·√d` with rational `a, b`, supporting exact
//!   sign evaluation, which is what every certified comparison bottoms out in.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_square, isqrt};
use crate::error::{Error, Result};

/// `(p + √d)/q` with `d > 0` non-square and `q | d − p²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

/// Partial quotients of a quadratic surd: a pre-period followed by a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdExpansion {
    pub pre: Vec<BigInt>,
    pub cycle: Vec<BigInt>,
}

impl SurdExpansion {
    /// Quotient at position `i` (0 = integer part).
    pub fn quotient(&self, i: usize) -> BigInt {
        if i < self.pre.len() {
            self.pre[i].clone()
        } else {
            self.cycle[(i - self.pre.len()) % self.cycle.len()].clone()
        }
    }
}

impl QuadraticSurd {
    /// Strict constructor: rejects square `d`, zero `q`, and triples where
    /// `q` does not divide `d − p²`.
    pub fn new(p: BigInt, q: BigInt, d: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !d.is_positive() || is_square(&d) {
            return Err(Error::SquareDiscriminant(d));
        }
        let rem = (&d - &p * &p) % &q;
        if !rem.is_zero() {
            return Err(Error::NonNormalizedSurd { p, q, d });
        }
        Ok(QuadraticSurd { p, q, d })
    }

    /// Constructor that scales the triple so the divisibility precondition
    /// holds: `(p + √d)/q = (p|q| + √(dq²))/(q|q|)`.
    pub fn normalized(p: BigInt, q: BigInt, d: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !d.is_positive() || is_square(&d) {
            return Err(Error::SquareDiscriminant(d));
        }
        if ((&d - &p * &p) % &q).is_zero() {
            return Self::new(p, q, d);
        }
        let scale = q.abs();
        Self::new(&p * &scale, &q * &scale, &d * &q * &q)
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// The value as an `a + b√d` expression.
    pub fn expr(&self) -> QuadExpr {
        QuadExpr {
            a: BigRational::new(self.p.clone(), self.q.clone()),
            b: BigRational::new(BigInt::one(), self.q.clone()),
            d: self.d.clone(),
        }
    }

    /// `k·α − c` as an exact expression, for convergent error terms.
    pub fn scale_sub(&self, k: &BigInt, c: &BigInt) -> QuadExpr {
        QuadExpr {
            a: BigRational::new(k * &self.p, self.q.clone()) - BigRational::from_integer(c.clone()),
            b: BigRational::new(k.clone(), self.q.clone()),
            d: self.d.clone(),
        }
    }

    /// The surd shifted by an integer: `α − k`.
    pub fn sub_int(&self, k: &BigInt) -> QuadraticSurd {
        QuadraticSurd {
            p: &self.p - k * &self.q,
            q: self.q.clone(),
            d: self.d.clone(),
        }
    }

    /// Exact `⌊α⌋`.
    pub fn floor(&self) -> BigInt {
        let s = isqrt(&self.d);
        // ⌊(p + √d)/q⌋: √d ∈ (s, s+1) since d is non-square.
        let mut t = if self.q.is_positive() {
            (&self.p + &s).div_floor(&self.q)
        } else {
            (&self.p + &s + 1u32).div_floor(&self.q)
        };
        // The estimate is within one; fix with exact sign checks.
        while self.expr().cmp_rational(&BigRational::from_integer(t.clone())) == Ordering::Less {
            t -= 1u32;
        }
        loop {
            let next = &t + 1u32;
            if self.expr().cmp_rational(&BigRational::from_integer(next.clone())) != Ordering::Less
            {
                t = next;
            } else {
                break;
            }
        }
        t
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.expr().enclosure(80);
        (crate::arith::rat_to_f64(&lo) + crate::arith::rat_to_f64(&hi)) / 2.0
    }

    /// Partial quotients via the integer state machine
    /// `a = ⌊(P + √d)/Q⌋`, `P' = aQ − P`, `Q' = (d − P'²)/Q`,
    /// with cycle detection on the `(P, Q)` state.
    pub fn expansion(&self, max_steps: usize) -> Result<SurdExpansion> {
        let mut p = self.p.clone();
        let mut q = self.q.clone();
        let mut quotients: Vec<BigInt> = Vec::new();
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();

        for step in 0..max_steps {
            if let Some(&first) = seen.get(&(p.clone(), q.clone())) {
                let cycle = quotients.split_off(first);
                return Ok(SurdExpansion {
                    pre: quotients,
                    cycle,
                });
            }
            seen.insert((p.clone(), q.clone()), step);
            let state = QuadraticSurd {
                p: p.clone(),
                q: q.clone(),
                d: self.d.clone(),
            };
            let a = state.floor();
            let p_next = &a * &q - &p;
            let q_next = (&self.d - &p_next * &p_next) / &q;
            quotients.push(a);
            p = p_next;
            q = q_next;
        }
        Err(Error::DepthCapReached { cap: max_steps })
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + sqrt({}))/{}", self.p, self.d, self.q)
    }
}

/// `a + b·√d` with rational coefficients; `d > 0` non-square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExpr {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl QuadExpr {
    pub fn from_rational(a: BigRational, d: BigInt) -> Self {
        QuadExpr {
            a,
            b: BigRational::zero(),
            d,
        }
    }

    /// Exact sign of `a + b√d`.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return self.a.cmp(&BigRational::zero());
        }
        if self.a.is_zero() {
            return self.b.cmp(&BigRational::zero());
        }
        let d = BigRational::from_integer(self.d.clone());
        match (self.a.is_positive(), self.b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            (true, false) => {
                // sign(a² − b²d), a > 0 > b
                (&self.a * &self.a).cmp(&(&self.b * &self.b * &d))
            }
            (false, true) => {
                // −(a² − b²d) comparison, b > 0 > a
                (&self.b * &self.b * &d).cmp(&(&self.a * &self.a))
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn abs(&self) -> QuadExpr {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn neg(&self) -> QuadExpr {
        QuadExpr {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, other: &QuadExpr) -> QuadExpr {
        assert_eq!(self.d, other.d, "mixed discriminants");
        QuadExpr {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            d: self.d.clone(),
        }
    }

    pub fn sub_rational(&self, r: &BigRational) -> QuadExpr {
        QuadExpr {
            a: &self.a - r,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> QuadExpr {
        QuadExpr {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d.clone(),
        }
    }

    /// Compare with a rational, exactly.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        self.sub_rational(r).sign()
    }

    /// Compare two expressions over the same field, exactly.
    pub fn cmp(&self, other: &QuadExpr) -> Ordering {
        self.sub(other).sign()
    }

    /// Dyadic enclosure with `prec` fractional bits.
    pub fn enclosure(&self, prec: u32) -> (BigRational, BigRational) {
        let scale = BigInt::one() << prec;
        let root_lo = isqrt(&(&self.d * &scale * &scale));
        let sqrt_lo = BigRational::new(root_lo.clone(), scale.clone());
        let sqrt_hi = BigRational::new(root_lo + 1u32, scale);
        let (t_lo, t_hi) = if self.b.is_negative() {
            (&self.b * &sqrt_hi, &self.b * &sqrt_lo)
        } else {
            (&self.b * &sqrt_lo, &self.b * &sqrt_hi)
        };
        (&self.a + t_lo, &self.a + t_hi)
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.enclosure(80);
        (crate::arith::rat_to_f64(&lo) + crate::arith::rat_to_f64(&hi)) / 2.0
    }
}

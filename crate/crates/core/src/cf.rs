//! Continued fractions: quotient sources, convergents, and certified
//! enclosures of the approximation errors `|q·α − p|`.
//!
//! Enclosures come in two strengths. The canonical interval
//! `[1/(q_{i+1}+q_i), 1/q_{i+1}]` is always available; the refined interval
//! evaluates `|q_i·α − p_i|` at a deep convergent bracket of `α`, which
//! shrinks the width roughly like `1/q_j²` and is what certified strict
//! comparisons use.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::rational_pow_ceil;
use crate::error::{Error, Result};
use crate::surd::QuadraticSurd;
use crate::Certainty;

/// Default cap on rule-generated expansions. Rule denominators can grow
/// doubly exponentially, so cost must be counted in `q_i` bit-length.
pub const DEFAULT_DEPTH_CAP: usize = 64;

/// Hard ceiling on denominator bit size for rule-generated quotients.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 23;

/// A quotient tail generated by a pure rule of the index and the
/// denominators computed so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientRule {
    /// `a_i` drawn deterministically from a seeded generator, in `[1, bound]`.
    Bounded { bound: u64, seed: u64 },
    /// `a_{i+1} = max(2, i·⌈q_i^sigma⌉)`: denominators decay so fast that no
    /// Diophantine constant survives at exponent `sigma`.
    LiouvilleDecay { sigma: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientTail {
    Finite(Vec<BigInt>),
    Periodic { pre: Vec<BigInt>, cycle: Vec<BigInt> },
    Rule(QuotientRule),
}

/// The partial quotients `[a₀; a₁, a₂, …]` of a real number, finite or
/// rule-generated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialQuotients {
    pub a0: BigInt,
    pub tail: QuotientTail,
    pub depth_cap: usize,
}

impl PartialQuotients {
    pub fn new(a0: BigInt, tail: QuotientTail) -> Self {
        PartialQuotients {
            a0,
            tail,
            depth_cap: DEFAULT_DEPTH_CAP,
        }
    }

    /// Highest index with a defined quotient, `None` if unbounded.
    pub fn available_depth(&self) -> Option<usize> {
        match &self.tail {
            QuotientTail::Finite(t) => Some(t.len()),
            QuotientTail::Periodic { .. } => None,
            QuotientTail::Rule(_) => Some(self.depth_cap),
        }
    }

    /// Expand to `depth` (inclusive index), computing quotients and
    /// convergents jointly so rules may consult earlier denominators.
    pub fn expand(&self, depth: usize) -> Result<Expansion> {
        if let QuotientTail::Finite(t) = &self.tail {
            if depth > t.len() {
                return Err(Error::DepthExceeded {
                    requested: depth,
                    available: t.len(),
                });
            }
        }
        if matches!(self.tail, QuotientTail::Rule(_)) && depth > self.depth_cap {
            return Err(Error::DepthCapReached {
                cap: self.depth_cap,
            });
        }

        let mut quotients: Vec<BigInt> = Vec::with_capacity(depth + 1);
        let mut convergents: Vec<Convergent> = Vec::with_capacity(depth + 1);
        let mut rng = match &self.tail {
            QuotientTail::Rule(QuotientRule::Bounded { seed, .. }) => {
                Some(ChaCha8Rng::seed_from_u64(*seed))
            }
            _ => None,
        };

        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
        for i in 0..=depth {
            let a = if i == 0 {
                self.a0.clone()
            } else {
                match &self.tail {
                    QuotientTail::Finite(t) => t[i - 1].clone(),
                    QuotientTail::Periodic { pre, cycle } => {
                        let k = i - 1;
                        if k < pre.len() {
                            pre[k].clone()
                        } else {
                            cycle[(k - pre.len()) % cycle.len()].clone()
                        }
                    }
                    QuotientTail::Rule(QuotientRule::Bounded { bound, .. }) => {
                        BigInt::from(rng.as_mut().unwrap().gen_range(1..=*bound))
                    }
                    QuotientTail::Rule(QuotientRule::LiouvilleDecay { sigma }) => {
                        let q_last = &convergents[i - 1].q;
                        liouville_quotient(i, q_last, sigma)
                    }
                }
            };
            debug_assert!(i == 0 || a >= BigInt::one(), "quotient below 1 at {i}");

            let (p, q) = if i == 0 {
                (a.clone(), BigInt::one())
            } else {
                (
                    &a * &convergents[i - 1].p + &p_prev,
                    &a * &convergents[i - 1].q + &q_prev,
                )
            };
            if i >= 1 {
                p_prev = convergents[i - 1].p.clone();
                q_prev = convergents[i - 1].q.clone();
            }
            if matches!(self.tail, QuotientTail::Rule(_)) && q.bits() > DEFAULT_BIT_BUDGET {
                return Err(Error::BitBudgetExhausted {
                    index: i,
                    bits: q.bits(),
                });
            }
            debug_assert!(det_identity_holds(i, &p, &q, &p_prev, &q_prev));
            quotients.push(a);
            convergents.push(Convergent { index: i, p, q });
        }

        let exact = match &self.tail {
            QuotientTail::Finite(t) if depth == t.len() => {
                let last = &convergents[depth];
                Some(BigRational::new(last.p.clone(), last.q.clone()))
            }
            _ => None,
        };
        Ok(Expansion {
            quotients,
            convergents,
            exact,
        })
    }
}

fn det_identity_holds(i: usize, p: &BigInt, q: &BigInt, p_prev: &BigInt, q_prev: &BigInt) -> bool {
    if i == 0 {
        return true;
    }
    let det = p * q_prev - p_prev * q;
    if i % 2 == 1 {
        det == BigInt::one()
    } else {
        det == -BigInt::one()
    }
}

fn liouville_quotient(i: usize, q_last: &BigInt, sigma: &BigRational) -> BigInt {
    // a_i = max(2, (i−1)·⌈q_{i−1}^sigma⌉)
    let factor = BigInt::from(i as u64 - 1);
    if factor.is_zero() {
        return BigInt::from(2u32);
    }
    let a = sigma.numer().to_u32().expect("sigma numerator too large");
    let b = sigma.denom().to_u32().expect("sigma denominator too large");
    let power = rational_pow_ceil(&BigRational::from_integer(q_last.clone()), a, b);
    (factor * power).max(BigInt::from(2u32))
}

/// A convergent `p_i/q_i` with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub index: usize,
    pub p: BigInt,
    pub q: BigInt,
}

impl fmt::Display for Convergent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Certified rational enclosure of `Δ_i = |q_i·α − p_i|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaInterval {
    pub index: usize,
    pub lo: BigRational,
    pub hi: BigRational,
}

impl DeltaInterval {
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// A computed expansion: quotients `a_0..a_depth` and the matching
/// convergents. Immutable once built.
#[derive(Debug, Clone)]
pub struct Expansion {
    quotients: Vec<BigInt>,
    convergents: Vec<Convergent>,
    exact: Option<BigRational>,
}

impl Expansion {
    pub fn depth(&self) -> usize {
        self.quotients.len() - 1
    }

    pub fn quotients(&self) -> &[BigInt] {
        &self.quotients
    }

    pub fn convergents(&self) -> &[Convergent] {
        &self.convergents
    }

    pub fn convergent(&self, i: usize) -> &Convergent {
        &self.convergents[i]
    }

    pub fn q(&self, i: usize) -> &BigInt {
        &self.convergents[i].q
    }

    pub fn p(&self, i: usize) -> &BigInt {
        &self.convergents[i].p
    }

    /// The exact value when the expansion is finite and fully computed.
    pub fn alpha_exact(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    /// An interval containing `α`, from the last two convergents.
    pub fn alpha_bracket(&self) -> (BigRational, BigRational) {
        if let Some(x) = &self.exact {
            return (x.clone(), x.clone());
        }
        let d = self.depth();
        let a = BigRational::new(self.p(d - 1).clone(), self.q(d - 1).clone());
        let b = BigRational::new(self.p(d).clone(), self.q(d).clone());
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Canonical enclosure `[1/(q_{i+1}+q_i), 1/q_{i+1}]` of `Δ_i`.
    pub fn delta_bounds(&self, i: usize) -> Result<DeltaInterval> {
        if i + 1 > self.depth() {
            return Err(Error::DepthExceeded {
                requested: i + 1,
                available: self.depth(),
            });
        }
        let q_next = self.q(i + 1);
        let q_i = self.q(i);
        Ok(DeltaInterval {
            index: i,
            lo: BigRational::new(BigInt::one(), q_next + q_i),
            hi: BigRational::new(BigInt::one(), q_next.clone()),
        })
    }

    /// Best available enclosure of `Δ_i`, evaluating `|q_i·α − p_i|` on the
    /// convergent bracket of `α`. Exact for fully expanded rationals.
    pub fn delta_refined(&self, i: usize) -> Result<(BigRational, BigRational)> {
        let canonical = self.delta_bounds(i)?;
        if let Some(alpha) = &self.exact {
            let v = (alpha * self.q(i) - BigRational::from_integer(self.p(i).clone())).abs();
            return Ok((v.clone(), v));
        }
        let d = self.depth();
        if d < i + 2 {
            return Ok((canonical.lo, canonical.hi));
        }
        // |q_i·x − p_i| at x = p_j/q_j is |q_i·p_j − p_i·q_j| / q_j, an exact
        // integer quotient; for j > i both bracket endpoints sit on the same
        // side of the root, so min/max of the endpoint values encloses Δ_i.
        let eval = |j: usize| -> BigRational {
            let num = (self.q(i) * self.p(j) - self.p(i) * self.q(j)).abs();
            BigRational::new(num, self.q(j).clone())
        };
        let e1 = eval(d - 1);
        let e2 = eval(d);
        let (mut lo, mut hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        if lo < canonical.lo {
            lo = canonical.lo;
        }
        if hi > canonical.hi {
            hi = canonical.hi;
        }
        Ok((lo, hi))
    }

    /// Exact `Δ_i` as a quadratic expression, when `α` is a known surd.
    pub fn delta_exact_surd(&self, surd: &QuadraticSurd, i: usize) -> crate::surd::QuadExpr {
        surd.scale_sub(&self.convergents[i].q, &self.convergents[i].p).abs()
    }
}

/// Euclidean expansion of `p/q` in canonical form (last quotient ≥ 2 when
/// the expansion has length ≥ 2). `p` may be negative; `a₀` absorbs sign.
pub fn expand_rational(p: &BigInt, q: &BigInt) -> PartialQuotients {
    assert!(q.is_positive(), "denominator must be ≥ 1");
    let mut quotients = Vec::new();
    let (mut num, mut den) = (p.clone(), q.clone());
    loop {
        let a = num.div_floor(&den);
        let r = &num - &a * &den;
        quotients.push(a);
        if r.is_zero() {
            break;
        }
        num = den;
        den = r;
    }
    debug_assert!(quotients.len() < 2 || *quotients.last().unwrap() >= BigInt::from(2u32));
    let a0 = quotients.remove(0);
    PartialQuotients::new(a0, QuotientTail::Finite(quotients))
}

/// Reconstruct the rational value of a finite expansion (test oracle for
/// `expand_rational`).
pub fn rational_value(pq: &PartialQuotients) -> Option<BigRational> {
    match &pq.tail {
        QuotientTail::Finite(t) => {
            let exp = pq.expand(t.len()).ok()?;
            exp.alpha_exact().cloned()
        }
        _ => None,
    }
}

/// Eventually periodic expansion of `(p + √d)/q` via the exact integer
/// surd algorithm. Rejects square `d` and non-normalized denominators.
pub fn expand_quadratic(p: &BigInt, q: &BigInt, d: &BigInt) -> Result<PartialQuotients> {
    let surd = QuadraticSurd::new(p.clone(), q.clone(), d.clone())?;
    let exp = surd.expansion(4096)?;
    let mut pre = exp.pre;
    let a0 = pre.remove(0);
    Ok(PartialQuotients::new(
        a0,
        QuotientTail::Periodic {
            pre,
            cycle: exp.cycle,
        },
    ))
}

/// First `n` convergents of an expansion.
pub fn convergents(pq: &PartialQuotients, n: usize) -> Result<Vec<Convergent>> {
    assert!(n >= 1);
    let exp = pq.expand(n - 1)?;
    Ok(exp.convergents().to_vec())
}

/// Report from a monotone growth scan `q_i ≥ 2·q_{i−2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingReport {
    pub checked_up_to: usize,
    pub first_violation: Option<usize>,
}

impl DoublingReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Check `q_i ≥ 2·q_{i−2}` for `2 ≤ i ≤ i_max` (exact integers).
pub fn check_denominator_doubling(exp: &Expansion, i_max: usize) -> DoublingReport {
    let top = i_max.min(exp.depth());
    for i in 2..=top.max(1) {
        if i < 2 {
            continue;
        }
        if exp.q(i) < &(exp.q(i - 2) * 2u32) {
            return DoublingReport {
                checked_up_to: top,
                first_violation: Some(i),
            };
        }
    }
    DoublingReport {
        checked_up_to: top,
        first_violation: None,
    }
}

/// Per-index result of the duality check
/// `½·Δ_{i−1}⁻¹ < q_i ≤ Δ_{i−1}⁻¹`.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub results: Vec<(usize, Certainty)>,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|(_, c)| *c == Certainty::Holds)
    }
    pub fn any_fail(&self) -> bool {
        self.results.iter().any(|(_, c)| *c == Certainty::Fails)
    }
}

/// Check the duality bound for `1 ≤ i ≤ i_max`. A verdict is `Holds`/`Fails`
/// only when it holds/fails for every point of the certified enclosure.
pub fn check_delta_duality(exp: &Expansion, i_max: usize) -> Result<DualityReport> {
    let mut results = Vec::new();
    let top = i_max.min(exp.depth().saturating_sub(0));
    for i in 1..=top {
        results.push((i, duality_at(exp, i)?));
    }
    Ok(DualityReport { results })
}

fn duality_at(exp: &Expansion, i: usize) -> Result<Certainty> {
    let q_i = exp.q(i);
    let upper = BigRational::new(BigInt::one(), q_i.clone());
    let lower = BigRational::new(BigInt::one(), q_i * 2u32);
    if let Some(alpha) = exp.alpha_exact() {
        let delta =
            (alpha * exp.q(i - 1) - BigRational::from_integer(exp.p(i - 1).clone())).abs();
        let ok = delta <= upper && delta > lower;
        return Ok(if ok { Certainty::Holds } else { Certainty::Fails });
    }
    let (lo, hi) = exp.delta_refined(i - 1)?;
    let holds_a = hi <= upper;
    let fails_a = lo > upper;
    let holds_b = lo > lower;
    let fails_b = hi <= lower;
    Ok(if holds_a && holds_b {
        Certainty::Holds
    } else if fails_a || fails_b {
        Certainty::Fails
    } else {
        Certainty::Unresolved
    })
}

/// The subsequence of convergent indices along which denominators at least
/// double, with the certified decay link between consecutive entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingChain {
    /// `i_0 = 0, i_1 = 1, …`; consecutive gaps are 1 or 2.
    pub indices: Vec<usize>,
    /// `ratio[m] = ⌊q_{i_{m+1}} / q_{i_m}⌋`; at least 2 for `m ≥ 1`.
    pub ratios: Vec<BigInt>,
}

/// Build the maximal chain within the expansion depth: seeds `i₀ = 0`,
/// `i₁ = 1`, then each step advances 1 or 2 indices to the first denominator
/// ratio of at least 2.
pub fn doubling_subsequence(exp: &Expansion) -> Result<DoublingChain> {
    if exp.depth() < 1 {
        return Err(Error::InvalidInput(
            "need at least two convergents".into(),
        ));
    }
    let mut indices = vec![0usize, 1usize];
    loop {
        let cur = *indices.last().unwrap();
        let q_cur = exp.q(cur);
        let mut advanced = false;
        for j in 1..=2usize {
            let k = cur + j;
            if k > exp.depth() {
                break;
            }
            if exp.q(k).div_floor(q_cur) >= BigInt::from(2u32) {
                indices.push(k);
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    let ratios = indices
        .windows(2)
        .map(|w| exp.q(w[1]).div_floor(exp.q(w[0])))
        .collect::<Vec<_>>();
    for (m, r) in ratios.iter().enumerate() {
        debug_assert!(m == 0 || *r >= BigInt::from(2u32));
    }
    Ok(DoublingChain { indices, ratios })
}

impl DoublingChain {
    /// Certified check of `Δ_{i_m−1} < 4·Δ_{i_{m+1}−2}` for each `m ≥ 1`
    /// with a successor. Flags `Unresolved` when the enclosures cannot
    /// separate the two sides.
    pub fn verify_decay_links(&self, exp: &Expansion) -> Result<Vec<(usize, Certainty)>> {
        let mut out = Vec::new();
        for m in 1..self.indices.len().saturating_sub(1) {
            let left = self.indices[m] - 1;
            let right = self.indices[m + 1] - 2;
            let (_, left_hi) = exp.delta_refined(left)?;
            let (right_lo, right_hi) = exp.delta_refined(right)?;
            let four = BigRational::from_integer(BigInt::from(4u32));
            let c = if left_hi < &four * &right_lo {
                Certainty::Holds
            } else {
                let (left_lo, _) = exp.delta_refined(left)?;
                if left_lo >= &four * &right_hi {
                    Certainty::Fails
                } else {
                    Certainty::Unresolved
                }
            };
            out.push((m, c));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{big, rat, rat_to_f64};

    fn sqrt2() -> PartialQuotients {
        expand_quadratic(&big(0), &big(1), &big(2)).unwrap()
    }

    fn golden() -> PartialQuotients {
        expand_quadratic(&big(1), &big(2), &big(5)).unwrap()
    }

    #[test]
    fn euclid_canonical_form() {
        // Oracle: 355/113 = 3 + 1/(7 + 1/16) by hand.
        let pq = expand_rational(&big(355), &big(113));
        assert_eq!(pq.a0, big(3));
        assert_eq!(pq.tail, QuotientTail::Finite(vec![big(7), big(16)]));
        assert_eq!(rational_value(&pq).unwrap(), rat(355, 113));

        let pq = expand_rational(&big(0), &big(1));
        assert_eq!(pq.a0, big(0));
        assert_eq!(pq.tail, QuotientTail::Finite(vec![]));

        let pq = expand_rational(&big(1), &big(2));
        assert_eq!(pq.a0, big(0));
        assert_eq!(pq.tail, QuotientTail::Finite(vec![big(2)]));

        // Negative numerator: a0 absorbs the sign.
        let pq = expand_rational(&big(-7), &big(2));
        assert_eq!(pq.a0, big(-4));
        assert_eq!(rational_value(&pq).unwrap(), rat(-7, 2));
    }

    #[test]
    fn sqrt2_convergents() {
        // Oracle: recurrence p_i = a_i p_{i−1} + p_{i−2} by hand.
        let cs = convergents(&sqrt2(), 5).unwrap();
        let want = [(1, 1), (3, 2), (7, 5), (17, 12), (41, 29)];
        for (c, (p, q)) in cs.iter().zip(want) {
            assert_eq!(c.p, big(p));
            assert_eq!(c.q, big(q));
        }
    }

    #[test]
    fn golden_denominators_are_fibonacci() {
        let cs = convergents(&golden(), 6).unwrap();
        let want_q = [1i64, 1, 2, 3, 5, 8];
        for (c, q) in cs.iter().zip(want_q) {
            assert_eq!(c.q, big(q));
        }
    }

    #[test]
    fn seed_convergents() {
        let pq = expand_rational(&big(1), &big(2));
        let cs = convergents(&pq, 2).unwrap();
        assert_eq!((cs[0].p.clone(), cs[0].q.clone()), (big(0), big(1)));
        assert_eq!((cs[1].p.clone(), cs[1].q.clone()), (big(1), big(2)));
    }

    #[test]
    fn finite_depth_error() {
        let pq = expand_rational(&big(355), &big(113));
        assert!(matches!(
            convergents(&pq, 5),
            Err(Error::DepthExceeded { .. })
        ));
    }

    #[test]
    fn delta_bounds_examples() {
        let exp = sqrt2().expand(8).unwrap();
        let d1 = exp.delta_bounds(1).unwrap();
        assert_eq!(d1.lo, rat(1, 7));
        assert_eq!(d1.hi, rat(1, 5));
        // Oracle: Δ₁ = |2√2 − 3| ≈ 0.17157 ∈ [1/7, 1/5]
        let true_d1 = 2.0 * 2f64.sqrt() - 3.0;
        assert!(rat_to_f64(&d1.lo) <= true_d1.abs() && true_d1.abs() <= rat_to_f64(&d1.hi));

        let d0 = exp.delta_bounds(0).unwrap();
        assert_eq!(d0.lo, rat(1, 3));
        assert_eq!(d0.hi, rat(1, 2));
        assert!(d0.contains(&rat(41421, 100000)));

        // Fibonacci values: i=3 gives [1/(q₄+q₃), 1/q₄] = [1/8, 1/5]
        let exp = golden().expand(8).unwrap();
        let d3 = exp.delta_bounds(3).unwrap();
        assert_eq!(d3.lo, rat(1, 8));
        assert_eq!(d3.hi, rat(1, 5));
    }

    #[test]
    fn refined_delta_brackets_exact_surd_value() {
        let surd = QuadraticSurd::new(big(0), big(1), big(2)).unwrap();
        let exp = sqrt2().expand(30).unwrap();
        for i in 0..=20usize {
            let (lo, hi) = exp.delta_refined(i).unwrap();
            let exact = exp.delta_exact_surd(&surd, i);
            assert_ne!(exact.cmp_rational(&lo), std::cmp::Ordering::Less, "i={i}");
            assert_ne!(exact.cmp_rational(&hi), std::cmp::Ordering::Greater, "i={i}");
            // refined must sit inside canonical
            let c = exp.delta_bounds(i).unwrap();
            assert!(lo >= c.lo && hi <= c.hi);
        }
    }

    #[test]
    fn deltas_strictly_decrease() {
        let exp = golden().expand(30).unwrap();
        for i in 1..=25usize {
            let prev = exp.delta_bounds(i - 1).unwrap();
            let cur = exp.delta_bounds(i).unwrap();
            assert!(cur.hi < prev.hi);
            assert!(cur.lo < prev.lo);
        }
    }

    #[test]
    fn doubling_lemma_holds_for_corpus() {
        for pq in [sqrt2(), golden()] {
            let exp = pq.expand(25).unwrap();
            assert!(check_denominator_doubling(&exp, 25).passed());
        }
        // vacuous case
        let exp = sqrt2().expand(1).unwrap();
        assert!(check_denominator_doubling(&exp, 1).passed());
    }

    #[test]
    fn duality_resolves_with_refined_enclosures() {
        let exp = golden().expand(25).unwrap();
        let report = check_delta_duality(&exp, 15).unwrap();
        assert!(report.all_hold(), "{:?}", report.results);

        let exp = sqrt2().expand(25).unwrap();
        assert!(check_delta_duality(&exp, 15).unwrap().all_hold());

        // i_max = 0 is vacuous
        let r = check_delta_duality(&exp, 0).unwrap();
        assert!(r.results.is_empty());
    }

    #[test]
    fn duality_for_full_rational_expansion() {
        let pq = expand_rational(&big(355), &big(113));
        let exp = pq.expand(2).unwrap();
        let report = check_delta_duality(&exp, 2).unwrap();
        assert!(report.all_hold());
    }

    #[test]
    fn doubling_chain_golden() {
        // q: 1,1,2,3,5,8,13,21,34,55,89 — the first ratio jump is at index 2
        // (⌊q₂/q₁⌋ = 2), after which denominators double every two steps.
        let exp = golden().expand(12).unwrap();
        let chain = doubling_subsequence(&exp).unwrap();
        assert_eq!(&chain.indices[..6], &[0, 1, 2, 4, 6, 8]);
        for w in chain.indices.windows(2) {
            assert!(w[1] - w[0] <= 2);
        }
        for r in &chain.ratios[1..] {
            assert!(*r >= big(2));
        }
        // intermediate indices have floor ratio 1
        for m in 1..chain.indices.len() - 1 {
            for k in chain.indices[m] + 1..chain.indices[m + 1] {
                assert_eq!(
                    exp.q(k).div_floor(exp.q(chain.indices[m])),
                    big(1)
                );
            }
        }
        let links = chain.verify_decay_links(&exp).unwrap();
        assert!(links.iter().all(|(_, c)| *c == Certainty::Holds));
    }

    #[test]
    fn doubling_chain_fast_growth() {
        // all quotients ≥ 2 → every index doubles
        let pq = sqrt2();
        let exp = pq.expand(10).unwrap();
        let chain = doubling_subsequence(&exp).unwrap();
        assert_eq!(chain.indices, (0..=10).collect::<Vec<_>>());
        assert!(chain.verify_decay_links(&exp).unwrap().iter().all(|(_, c)| *c == Certainty::Holds));
    }

    #[test]
    fn doubling_chain_minimal_depth() {
        let exp = golden().expand(1).unwrap();
        let chain = doubling_subsequence(&exp).unwrap();
        assert_eq!(chain.indices, vec![0, 1]);
    }

    #[test]
    fn bounded_rule_is_deterministic() {
        let mk = || {
            PartialQuotients::new(
                big(0),
                QuotientTail::Rule(QuotientRule::Bounded { bound: 2, seed: 7 }),
            )
        };
        let a = mk().expand(40).unwrap();
        let b = mk().expand(40).unwrap();
        assert_eq!(a.quotients(), b.quotients());
        assert!(a.quotients()[1..]
            .iter()
            .all(|q| *q >= big(1) && *q <= big(2)));
    }

    #[test]
    fn liouville_rule_growth() {
        // sigma = 1: a_{i+1} = max(2, i·q_i); q: 1, 2, 5, 53, ...
        let pq = PartialQuotients::new(
            big(0),
            QuotientTail::Rule(QuotientRule::LiouvilleDecay { sigma: rat(1, 1) }),
        );
        let exp = pq.expand(4).unwrap();
        assert_eq!(exp.q(1), &big(2));
        assert_eq!(exp.quotients()[2], big(2)); // max(2, 1·2) = 2
        assert_eq!(exp.q(2), &big(5));
        assert_eq!(exp.quotients()[3], big(10)); // 2·5
        assert_eq!(exp.q(3), &big(52)); // 10·5 + 2
    }
}

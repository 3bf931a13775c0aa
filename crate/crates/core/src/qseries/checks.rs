use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use super::{
    coeff_u_lemma_at, limit_transform_sides, pochhammer, qbinomial_coefficient, qchu_sides,
    transform_sides, ts_pochhammer, ts_reciprocal_pochhammer, HypergeometricSpec,
};
use crate::arith::{format_rational, BigRational, RationalFunction, Scalar};
use crate::error::Result;
use crate::report::{index, Check, IdentityId, Index, VerificationReport};

/// Configuration for the seeded random parameter checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSuite {
    pub n_max: u32,
    /// Accepted (non-skipped) tuples required per `n`.
    pub per_n: usize,
    pub seed: u64,
}

impl Default for RandomSuite {
    fn default() -> Self {
        RandomSuite {
            n_max: 8,
            per_n: 20,
            seed: 0x5eed,
        }
    }
}

/// Mixes a base seed with a task tag and index (splitmix64 finalizer), so
/// each `(check, n)` stream is independent of scheduling.
pub fn derive_seed(base: u64, tag: u64, n: u64) -> u64 {
    let mut z = base ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ n.wrapping_mul(0xd1b5_4a32_d192_ed03);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Nonzero rational with numerator and denominator at most 12 in absolute value.
pub fn small_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.random_range(1..=12);
    let den: i64 = rng.random_range(1..=12);
    let sign = if rng.random_bool(0.5) { 1 } else { -1 };
    BigRational::new((sign * num).into(), den.into())
}

fn rf(value: &BigRational) -> RationalFunction {
    RationalFunction::constant(value.clone())
}

fn value_of(x: &RationalFunction) -> Value {
    match x.as_constant() {
        Some(c) => Value::String(format_rational(&c)),
        None => Value::String(x.to_string()),
    }
}

fn with_params(mut idx: Index, params: &[(&str, &RationalFunction)]) -> Index {
    for (name, v) in params {
        idx.insert((*name).to_string(), value_of(v));
    }
    idx
}

fn any_zero<F: Scalar>(values: &[F]) -> bool {
    values.iter().any(Zero::is_zero)
}

/// First vanishing Pochhammer denominator among `(a_i; Q)_k`, `k <= n`.
fn vanishing_pochhammer<F: Scalar>(args: &[(&str, &F)], base: &F, n: u32) -> Option<String> {
    for (name, a) in args {
        for k in 1..=n {
            if pochhammer(*a, base, k).is_zero() {
                return Some(format!("({name};Q)_{k} vanishes"));
            }
        }
    }
    None
}

fn qchu_precondition<F: Scalar>(n: u32, b: &F, c: &F, base: &F) -> Option<String> {
    if any_zero(&[b.clone(), base.clone()]) {
        return Some("B or Q is zero".into());
    }
    vanishing_pochhammer(&[("Q", base), ("C", c)], base, n)
}

fn transform_precondition<F: Scalar>(spec: &HypergeometricSpec<F>) -> Option<String> {
    let HypergeometricSpec { n, b, c, base, .. } = spec;
    if any_zero(&[b.clone(), c.clone(), base.clone()]) {
        return Some("B, C or Q is zero".into());
    }
    let lower = match base.powi(1 - i64::from(*n)) {
        Ok(p) => b.clone() * &p,
        Err(_) => return Some("Q is zero".into()),
    };
    let Ok(lower) = lower.try_div(c) else {
        return Some("C is zero".into());
    };
    vanishing_pochhammer(&[("Q", base), ("C", c), ("BQ^(1-n)/C", &lower)], base, *n)
}

fn limit_precondition<F: Scalar>(n: u32, c: &F, base: &F) -> Option<String> {
    if any_zero(&[c.clone(), base.clone()]) {
        return Some("C or Q is zero".into());
    }
    vanishing_pochhammer(&[("Q", base), ("C", c)], base, n)
}

fn eval_all(values: &[&RationalFunction], p: &BigRational) -> Result<Vec<BigRational>> {
    values.iter().map(|v| Ok(v.eval(p)?)).collect()
}

/// Adds one Chu-Vandermonde instance to `check`; returns false if skipped.
fn qchu_into(check: &mut Check, idx: Index, n: u32, b: &RationalFunction, c: &RationalFunction, base: &RationalFunction) -> bool {
    let idx = with_params(idx, &[("B", b), ("C", c), ("Q", base)]);
    if let Some(reason) = qchu_precondition(n, b, c, base) {
        check.skip(idx, reason);
        return false;
    }
    check.compare(idx, qchu_sides(n, b, c, base), |p| {
        let v = eval_all(&[b, c, base], p)?;
        qchu_sides(n, &v[0], &v[1], &v[2])
    });
    true
}

fn transform_into(check: &mut Check, idx: Index, spec: &HypergeometricSpec) -> bool {
    let idx = with_params(idx, &[("B", &spec.b), ("C", &spec.c), ("Q", &spec.base), ("Z", &spec.z)]);
    if let Some(reason) = transform_precondition(spec) {
        check.skip(idx, reason);
        return false;
    }
    check.compare(idx, transform_sides(spec), |p| {
        let v = eval_all(&[&spec.b, &spec.c, &spec.base, &spec.z], p)?;
        let numeric = HypergeometricSpec::new(spec.n, v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
        transform_sides(&numeric)
    });
    true
}

fn limit_into(check: &mut Check, idx: Index, n: u32, c: &RationalFunction, base: &RationalFunction, z: &RationalFunction) -> bool {
    let idx = with_params(idx, &[("C", c), ("Q", base), ("Z", z)]);
    if let Some(reason) = limit_precondition(n, c, base) {
        check.skip(idx, reason);
        return false;
    }
    check.compare(idx, limit_transform_sides(n, c, base, z), |p| {
        let v = eval_all(&[c, base, z], p)?;
        limit_transform_sides(n, &v[0], &v[1], &v[2])
    });
    true
}

/// Chu-Vandermonde evaluation for one parameter tuple.
pub fn qchu_check(n: u32, b: &RationalFunction, c: &RationalFunction, base: &RationalFunction) -> VerificationReport {
    let mut check = Check::new(IdentityId::QChu);
    qchu_into(&mut check, index([("n", i64::from(n))]), n, b, c, base);
    check.finish()
}

/// Terminating transformation for one parameter tuple.
pub fn transform_check(spec: &HypergeometricSpec) -> VerificationReport {
    let mut check = Check::new(IdentityId::Transform);
    transform_into(&mut check, index([("n", i64::from(spec.n))]), spec);
    check.finish()
}

/// Limiting transformation for one parameter tuple.
pub fn limit_transform_check(n: u32, c: &RationalFunction, base: &RationalFunction, z: &RationalFunction) -> VerificationReport {
    let mut check = Check::new(IdentityId::LimitTransform);
    limit_into(&mut check, index([("n", i64::from(n))]), n, c, base, z);
    check.finish()
}

/// Draws tuples until `per_n` are accepted (or `per_n * 5` attempts),
/// recording skipped draws.
fn run_random(
    identity: IdentityId,
    tag: u64,
    suite: &RandomSuite,
    mut attempt: impl FnMut(&mut Check, Index, u32, &mut ChaCha8Rng) -> bool,
) -> VerificationReport {
    let mut check = Check::new(identity);
    let mut draws = 0usize;
    for n in 0..=suite.n_max {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(suite.seed, tag, u64::from(n)));
        let mut accepted = 0;
        let mut tries = 0;
        while accepted < suite.per_n && tries < suite.per_n * 5 {
            let idx = index([("n", i64::from(n)), ("draw", tries as i64)]);
            tries += 1;
            if attempt(&mut check, idx, n, &mut rng) {
                accepted += 1;
            }
        }
        draws += tries;
        if accepted < suite.per_n {
            check.record(
                index([("n", i64::from(n))]),
                false,
                "too few admissible parameter tuples",
            );
        }
    }
    let check = check
        .param("n_max", suite.n_max)
        .param("per_n", suite.per_n)
        .param("seed", suite.seed)
        .param("draws", draws);
    check.finish()
}

pub fn random_qchu_suite(suite: &RandomSuite) -> VerificationReport {
    run_random(IdentityId::QChu, 1, suite, |check, idx, n, rng| {
        let (b, c, base) = (small_rational(rng), small_rational(rng), small_rational(rng));
        qchu_into(check, idx, n, &rf(&b), &rf(&c), &rf(&base))
    })
}

pub fn random_transform_suite(suite: &RandomSuite) -> VerificationReport {
    run_random(IdentityId::Transform, 2, suite, |check, idx, n, rng| {
        let vals: Vec<RationalFunction> = (0..4).map(|_| rf(&small_rational(rng))).collect();
        let spec = HypergeometricSpec::new(n, vals[0].clone(), vals[1].clone(), vals[2].clone(), vals[3].clone());
        transform_into(check, idx, &spec)
    })
}

pub fn random_limit_transform_suite(suite: &RandomSuite) -> VerificationReport {
    run_random(IdentityId::LimitTransform, 3, suite, |check, idx, n, rng| {
        let (c, base, z) = (small_rational(rng), small_rational(rng), small_rational(rng));
        limit_into(check, idx, n, &rf(&c), &rf(&base), &rf(&z))
    })
}

/// Coefficientwise sides of the two finite cases of the `Q`-binomial theorem:
/// `A = Q^k`, where the product side is `1/(Z;Q)_k`, and `A = Q^-k`, where it
/// is the polynomial `(Q^-k Z; Q)_k`.
fn qbinomial_sides<F: Scalar>(base: &F, k: u32, negative: bool, order: usize) -> Result<Vec<(F, F)>> {
    let kk = i64::from(k);
    let a = base.powi(if negative { -kk } else { kk })?;
    let product = if negative {
        ts_pochhammer(&a, base, k, order)
    } else {
        ts_reciprocal_pochhammer(&F::one(), base, k, order)?
    };
    let mut out = Vec::with_capacity(order + 1);
    for s in 0..=order as u32 {
        let sum_coeff = if negative {
            pochhammer(&a, base, s).try_div(&pochhammer(base, base, s))?
        } else {
            qbinomial_coefficient(k, s, base)?
        };
        out.push((sum_coeff, product.coeff(s as usize)));
    }
    Ok(out)
}

/// `Q`-binomial theorem coefficient check through `Z^order` for `k <= k_max`
/// at each listed `Q` (which should be non-constant or non-root-of-unity).
pub fn qbinomial_check(bases: &[RationalFunction], k_max: u32, order: usize) -> VerificationReport {
    let mut check = Check::new(IdentityId::QBinomial)
        .param("k_max", k_max)
        .param("order", order);
    for base in bases {
        for negative in [false, true] {
            for k in 0..=k_max {
                let symbolic = qbinomial_sides(base, k, negative, order);
                let numeric = |p: &BigRational| -> Result<Vec<(BigRational, BigRational)>> {
                    qbinomial_sides(&base.eval(p)?, k, negative, order)
                };
                let sign = if negative { -1 } else { 1 };
                match symbolic {
                    Ok(pairs) => {
                        for (s, (l, r)) in pairs.into_iter().enumerate() {
                            let idx = with_params(index([("a_exp", sign * i64::from(k)), ("s", s as i64)]), &[("Q", base)]);
                            check.compare(idx, Ok((l, r)), |p| {
                                let v = numeric(p)?;
                                Ok(v[s].clone())
                            });
                        }
                    }
                    Err(e) => {
                        let idx = with_params(index([("a_exp", sign * i64::from(k))]), &[("Q", base)]);
                        check.compare(idx, Err(e), |_| unreachable!());
                    }
                }
            }
        }
    }
    check.finish()
}

/// Closed-form coefficient of `u^(m-k)` in `1/(u/q; q^-2)_k` against the
/// truncated-series expansion, for `k <= k_max`, `k <= m <= m_max`.
pub fn coeff_lemma_check(k_max: u32, m_max: u32) -> VerificationReport {
    let mut check = Check::new(IdentityId::CoeffLemma)
        .param("k_max", k_max)
        .param("m_max", m_max);
    fn series_side<F: Scalar>(q: &F, k: u32, m_max: u32) -> Result<Vec<F>> {
        let order = (m_max - k) as usize;
        let s = ts_reciprocal_pochhammer(&q.try_inv()?, &q.powi(-2)?, k, order)?;
        Ok(s.coeffs().to_vec())
    }
    let q = RationalFunction::q();
    for k in 0..=k_max.min(m_max) {
        let series = series_side(&q, k, m_max);
        for m in k..=m_max {
            let j = (m - k) as usize;
            let symbolic = coeff_u_lemma_at(&q, k, m).and_then(|closed| {
                let s = series.as_ref().map_err(Clone::clone)?;
                Ok((closed, s[j].clone()))
            });
            check.compare(index([("k", i64::from(k)), ("m", i64::from(m))]), symbolic, |p| {
                Ok((coeff_u_lemma_at(p, k, m)?, series_side(p, k, m)?[j].clone()))
            });
        }
    }
    check.finish()
}

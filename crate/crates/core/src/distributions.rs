//! The symplectic and orthogonal Cohen-Lenstra type measures on partitions,
//! their first-column marginals, and a sampler over a truncated support.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::arith::{format_rational, sign_power, BigRational, RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, enumerate_up_to, ParityConstraint, Partition, WeightContext, WeightSign};
use crate::qseries::{pochhammer_table, ts_reciprocal_pochhammer, TruncatedSeries};
use crate::report::{index, Check, IdentityId, VerificationReport, NUMERIC_POINTS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CLFamily {
    /// Supported on partitions whose odd parts have even multiplicity.
    Sp,
    /// Supported on partitions whose even parts have even multiplicity.
    O,
}

impl CLFamily {
    pub fn constraint(self) -> ParityConstraint {
        match self {
            CLFamily::Sp => ParityConstraint::OddPartsEvenMultiplicity,
            CLFamily::O => ParityConstraint::EvenPartsEvenMultiplicity,
        }
    }

    pub fn sign(self) -> WeightSign {
        match self {
            CLFamily::Sp => WeightSign::Plus,
            CLFamily::O => WeightSign::Minus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CLFamily::Sp => "sp",
            CLFamily::O => "o",
        }
    }

    fn marginal_id(self) -> IdentityId {
        match self {
            CLFamily::Sp => IdentityId::MarginalSp,
            CLFamily::O => IdentityId::MarginalO,
        }
    }

    fn normalization_id(self) -> IdentityId {
        match self {
            CLFamily::Sp => IdentityId::NormalizationSp,
            CLFamily::O => IdentityId::NormalizationO,
        }
    }
}

impl fmt::Display for CLFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CLFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "sp" => Ok(CLFamily::Sp),
            "o" => Ok(CLFamily::O),
            other => Err(format!("unknown family {other:?} (expected sp or o)")),
        }
    }
}

/// Numeric parameters with the product `∏_{i>=1} (1 - u^2/q^(2i-1))` cut
/// off after `product_cutoff` factors.
#[derive(Clone, Debug, PartialEq)]
pub struct CLParams {
    q: BigRational,
    u: BigRational,
    product_cutoff: u32,
    tail_tolerance: BigRational,
    tail_bound: BigRational,
    truncated_product: BigRational,
}

impl CLParams {
    /// Requires `q > 1`, `0 < u < 1` and a positive tolerance. The cutoff is
    /// the least `I >= 1` whose tail bound is at most `tail_tolerance`.
    pub fn new(q: BigRational, u: BigRational, tail_tolerance: BigRational) -> Result<Self> {
        let one = BigRational::one();
        if q <= one {
            return Err(Error::InvalidParams(format!("q must exceed 1, got {}", format_rational(&q))));
        }
        if !u.is_positive() || u >= one {
            return Err(Error::InvalidParams(format!("u must lie in (0, 1), got {}", format_rational(&u))));
        }
        if !tail_tolerance.is_positive() {
            return Err(Error::InvalidParams("tail tolerance must be positive".into()));
        }
        let mut cutoff = 1;
        while tail_bound(&q, &u, cutoff) > tail_tolerance {
            cutoff += 1;
        }
        let u2 = &u * &u;
        let mut product = one.clone();
        for i in 1..=cutoff {
            product *= &one - &u2 / q.powi(2 * i64::from(i) - 1)?;
        }
        Ok(CLParams {
            tail_bound: tail_bound(&q, &u, cutoff),
            q,
            u,
            product_cutoff: cutoff,
            tail_tolerance,
            truncated_product: product,
        })
    }

    /// [`CLParams::new`] with tolerance `10^-30`.
    pub fn with_default_tolerance(q: BigRational, u: BigRational) -> Result<Self> {
        let tol = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(30));
        Self::new(q, u, tol)
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn u(&self) -> &BigRational {
        &self.u
    }

    pub fn product_cutoff(&self) -> u32 {
        self.product_cutoff
    }

    pub fn tail_tolerance(&self) -> &BigRational {
        &self.tail_tolerance
    }

    /// `δ` such that the infinite product lies in
    /// `[(1 - δ) P_I, P_I]` for the truncated product `P_I`.
    pub fn tail_bound(&self) -> &BigRational {
        &self.tail_bound
    }

    pub fn truncated_product(&self) -> &BigRational {
        &self.truncated_product
    }

    /// Truncated normalizing constant: the product, divided by `1 + u` for O.
    pub fn normalizer(&self, family: CLFamily) -> BigRational {
        match family {
            CLFamily::Sp => self.truncated_product.clone(),
            CLFamily::O => &self.truncated_product / (BigRational::one() + &self.u),
        }
    }

    fn to_json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("q".into(), format_rational(&self.q).into());
        m.insert("u".into(), format_rational(&self.u).into());
        m.insert("product_cutoff".into(), self.product_cutoff.into());
        m.insert("tail_tolerance".into(), format_rational(&self.tail_tolerance).into());
        m
    }
}

/// `Σ_{i>I} u^2 q^(1-2i) = u^2 q^(1-2I) / (q^2 - 1)`.
fn tail_bound(q: &BigRational, u: &BigRational, cutoff: u32) -> BigRational {
    let base = u * u / (q * q - BigRational::one());
    let e = 1 - 2 * i64::from(cutoff);
    base * q.powi(e).expect("q is nonzero")
}

/// A probability from the truncated product: the true value lies in
/// `[value * (1 - relative_error), value]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Probability {
    pub value: BigRational,
    pub relative_error: BigRational,
}

impl Probability {
    pub fn lower(&self) -> BigRational {
        &self.value * (BigRational::one() - &self.relative_error)
    }
}

/// `P(λ)` for the given family, exactly zero off its support.
pub fn prob(partition: &Partition, family: CLFamily, params: &CLParams) -> Result<Probability> {
    let relative_error = params.tail_bound().clone();
    if !family.constraint().accepts(partition) {
        return Ok(Probability {
            value: BigRational::zero(),
            relative_error,
        });
    }
    let ctx = WeightContext::new(params.q().clone(), partition.size())?;
    let weight = ctx.cl_numerator(partition, family.sign())?;
    let value = params.normalizer(family) * params.u().powi(i64::from(partition.size()))? * weight;
    Ok(Probability { value, relative_error })
}

/// `(k, power of u, q exponent, Pochhammer length)` of the marginal core for
/// a given first column.
fn marginal_shape(family: CLFamily, first_column: u32) -> (u32, u32, i64, u32) {
    let c = first_column;
    if c.is_multiple_of(2) {
        let k = c / 2;
        let ki = i64::from(k);
        let e = match family {
            CLFamily::Sp => 2 * ki * ki + ki,
            CLFamily::O => 2 * ki * ki - ki,
        };
        (k, 2 * k, e, k)
    } else {
        let k = c.div_ceil(2);
        let ki = i64::from(k);
        match family {
            CLFamily::Sp => (k, 2 * k, 2 * ki * ki - ki, k - 1),
            CLFamily::O => (k, 2 * k - 1, 2 * ki * ki - 3 * ki + 1, k - 1),
        }
    }
}

/// Total measure of `λ'_1 = first_column` without the shared prefactor, as a
/// series in `u` through `u^order`:
///
/// - Sp, `2k`: `u^2k / (q^(2k^2+k) (1/q^2;1/q^2)_k (u^2/q;1/q^2)_k)`
/// - Sp, `2k-1`: `u^2k / (q^(2k^2-k) (1/q^2;1/q^2)_(k-1) (u^2/q;1/q^2)_k)`
/// - O, `2k-1`: `u^(2k-1) / (q^(2k^2-3k+1) (1/q^2;1/q^2)_(k-1) (u^2/q;1/q^2)_k)`
/// - O, `2k`: `u^2k / (q^(2k^2-k) (1/q^2;1/q^2)_k (u^2/q;1/q^2)_k)`
///
/// Column `0` is the empty partition and gives the series `1`.
pub fn marginal_series_at<F: Scalar>(
    q: &F,
    family: CLFamily,
    first_column: u32,
    order: usize,
) -> Result<TruncatedSeries<F>> {
    let (k, shift, e, poch) = marginal_shape(family, first_column);
    let x = q.powi(-2)?;
    let inner = ts_reciprocal_pochhammer(&q.try_inv()?, &x, k, order / 2)?;
    let in_u = TruncatedSeries::from_coeffs(inner.coeffs().to_vec(), order).dilate(2);
    let half = pochhammer_table(&x, &x, poch);
    let scale = (q.powi(e)? * &half[poch as usize]).try_inv()?;
    Ok(in_u.scale(&scale).shift(shift as usize))
}

/// [`marginal_series_at`] over `Q(q)`.
pub fn marginal_series(family: CLFamily, first_column: u32, order: usize) -> Result<TruncatedSeries<RationalFunction>> {
    marginal_series_at(&RationalFunction::q(), family, first_column, order)
}

/// `cl_numerator` summed over supported partitions of each size `j <= order`
/// grouped by first column `c <= max_column`: entry `[c][j]`.
fn bruteforce_table<F: Scalar>(q: &F, family: CLFamily, max_column: u32, order: usize) -> Result<Vec<Vec<F>>> {
    let ctx = WeightContext::new(q.clone(), order as u32)?;
    let mut table = vec![vec![F::zero(); order + 1]; max_column as usize + 1];
    for j in 0..=order as u32 {
        for l in enumerate(j, family.constraint()) {
            let c = l.first_column();
            if c <= max_column {
                let cell = &mut table[c as usize][j as usize];
                *cell = cell.clone() + &ctx.cl_numerator(&l, family.sign())?;
            }
        }
    }
    Ok(table)
}

fn marginal_table<F: Scalar>(q: &F, family: CLFamily, max_column: u32, order: usize) -> Result<Vec<Vec<F>>> {
    (0..=max_column)
        .map(|c| Ok(marginal_series_at(q, family, c, order)?.coeffs().to_vec()))
        .collect()
}

type TablePair = (Vec<Vec<BigRational>>, Vec<Vec<BigRational>>);

/// Numeric tables at each of [`NUMERIC_POINTS`].
type PointTables = Vec<(BigRational, Result<TablePair>)>;

fn point_tables(
    build: impl Fn(&BigRational) -> Result<TablePair>,
) -> PointTables {
    NUMERIC_POINTS
        .iter()
        .map(|&p| {
            let point = BigRational::from_i64(p);
            let tables = build(&point);
            (point, tables)
        })
        .collect()
}

fn lookup<'a>(
    tables: &'a PointTables,
    p: &BigRational,
) -> Result<&'a TablePair> {
    let (_, t) = tables.iter().find(|(point, _)| point == p).expect("numeric point is tabulated");
    t.as_ref().map_err(Clone::clone)
}

/// Marginal series coefficients against the enumeration of partitions with
/// the given first column, for columns `c <= 2 k_max` and sizes `j <= order`.
pub fn marginal_vs_bruteforce(family: CLFamily, k_max: u32, order: usize) -> VerificationReport {
    let max_column = 2 * k_max;
    let mut check = Check::new(family.marginal_id())
        .param("family", family.name())
        .param("k_max", k_max)
        .param("order", order);
    let both = |q: &RationalFunction| -> Result<_> {
        Ok((marginal_table(q, family, max_column, order)?, bruteforce_table(q, family, max_column, order)?))
    };
    let symbolic = both(&RationalFunction::q());
    let numeric = point_tables(|p| {
        Ok((marginal_table(p, family, max_column, order)?, bruteforce_table(p, family, max_column, order)?))
    });
    for c in 0..=max_column as usize {
        for j in 0..=order {
            let idx = index([("c", c as i64), ("j", j as i64)]);
            let sides = symbolic
                .as_ref()
                .map(|(f, b)| (f[c][j].clone(), b[c][j].clone()))
                .map_err(Clone::clone);
            check.compare(idx, sides, |p| {
                let (f, b) = lookup(&numeric, p)?;
                Ok((f[c][j].clone(), b[c][j].clone()))
            });
        }
    }
    check.finish()
}

/// `∏_{i>=1} (1 - u^2/q^(2i-1))` through `u^order`, by its exact expansion
/// `Σ_n (-1)^n q^(-n^2) u^(2n) / (q^-2;q^-2)_n`; for O also times `1/(1+u)`.
pub fn prefactor_series<F: Scalar>(q: &F, family: CLFamily, order: usize) -> Result<TruncatedSeries<F>> {
    let x = q.powi(-2)?;
    let n_max = (order / 2) as u32;
    let half = pochhammer_table(&x, &x, n_max);
    let mut coeffs = vec![F::zero(); order + 1];
    for n in 0..=n_max {
        let ni = i64::from(n);
        coeffs[2 * n as usize] = (sign_power::<F>(ni) * &q.powi(-ni * ni)?).try_div(&half[n as usize])?;
    }
    let product = TruncatedSeries::from_coeffs(coeffs, order);
    Ok(match family {
        CLFamily::Sp => product,
        CLFamily::O => product.mul(&crate::qseries::ts_geometric(&-F::one(), order)),
    })
}

fn normalization_series<F: Scalar>(q: &F, family: CLFamily, order: usize) -> Result<Vec<F>> {
    let mut total = TruncatedSeries::zero(order);
    for c in 0..=order as u32 {
        total = total.add(&marginal_series_at(q, family, c, order)?);
    }
    Ok(prefactor_series(q, family, order)?.mul(&total).coeffs().to_vec())
}

/// The prefactor series times the sum of every marginal core equals `1`
/// through `u^order`, coefficient by coefficient.
pub fn normalization_check(family: CLFamily, order: usize) -> VerificationReport {
    let mut check = Check::new(family.normalization_id())
        .param("family", family.name())
        .param("order", order);
    let symbolic = normalization_series(&RationalFunction::q(), family, order);
    let numeric: Vec<_> = NUMERIC_POINTS
        .iter()
        .map(|&p| {
            let point = BigRational::from_i64(p);
            let s = normalization_series(&point, family, order);
            (point, s)
        })
        .collect();
    for j in 0..=order {
        let expected = |one: bool| if one { 1 } else { 0 };
        let sides = symbolic
            .as_ref()
            .map(|s| (s[j].clone(), RationalFunction::from_integer(expected(j == 0))))
            .map_err(Clone::clone);
        check.compare(index([("j", j as i64)]), sides, |p| {
            let (_, s) = numeric.iter().find(|(point, _)| point == p).expect("tabulated");
            let s = s.as_ref().map_err(Clone::clone)?;
            Ok((s[j].clone(), BigRational::from_i64(expected(j == 0))))
        });
    }
    check.finish()
}

/// Draws with the metadata needed to reproduce them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Sample {
    pub draws: Vec<Partition>,
    pub metadata: SampleMetadata,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleMetadata {
    /// Upper bound on the mass of partitions larger than `max_size`.
    pub truncated_mass_bound: f64,
    pub seed: u64,
    pub params: Map<String, Value>,
}

/// The truncated support with exact per-partition probabilities.
#[derive(Clone, Debug)]
pub struct TruncatedSupport {
    pub family: CLFamily,
    pub max_size: u32,
    pub partitions: Vec<Partition>,
    pub probabilities: Vec<BigRational>,
    pub relative_error: BigRational,
}

impl TruncatedSupport {
    pub fn new(family: CLFamily, params: &CLParams, max_size: u32) -> Result<Self> {
        let partitions = enumerate_up_to(max_size, family.constraint());
        let probabilities = partitions
            .iter()
            .map(|l| Ok(prob(l, family, params)?.value))
            .collect::<Result<Vec<_>>>()?;
        if probabilities.iter().all(Zero::is_zero) {
            return Err(Error::EmptySupport);
        }
        Ok(TruncatedSupport {
            family,
            max_size,
            partitions,
            probabilities,
            relative_error: params.tail_bound().clone(),
        })
    }

    /// Sum of the (over-estimated) probabilities on the support.
    pub fn mass(&self) -> BigRational {
        self.probabilities.iter().fold(BigRational::zero(), |acc, p| acc + p)
    }

    /// Upper bound on `1 - Σ_{|λ| <= max_size} P(λ)`.
    pub fn truncated_mass_bound(&self) -> BigRational {
        let lower = self.mass() * (BigRational::one() - &self.relative_error);
        let gap = BigRational::one() - lower;
        if gap.is_negative() {
            BigRational::zero()
        } else {
            gap
        }
    }

    /// Probabilities divided by [`mass`](Self::mass).
    pub fn renormalized(&self) -> Vec<BigRational> {
        let total = self.mass();
        self.probabilities.iter().map(|p| p / &total).collect()
    }

    /// Integer weights proportional to the probabilities, and their running sums.
    fn cumulative_weights(&self) -> Vec<BigInt> {
        let lcm = self
            .probabilities
            .iter()
            .fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let mut running = BigInt::zero();
        self.probabilities
            .iter()
            .map(|p| {
                running += p.numer() * (&lcm / p.denom());
                running.clone()
            })
            .collect()
    }
}

/// `count` independent draws from the measure conditioned on `|λ| <= max_size`,
/// by inverse CDF on a ChaCha8 stream seeded with `seed`.
pub fn sample(family: CLFamily, params: &CLParams, max_size: u32, count: usize, seed: u64) -> Result<Sample> {
    let support = TruncatedSupport::new(family, params, max_size)?;
    let draws = sample_from(&support, count, seed);
    let mut meta = params.to_json();
    meta.insert("family".into(), family.name().into());
    meta.insert("max_size".into(), max_size.into());
    meta.insert("count".into(), count.into());
    Ok(Sample {
        draws,
        metadata: SampleMetadata {
            truncated_mass_bound: support.truncated_mass_bound().to_f64().unwrap_or(f64::NAN),
            seed,
            params: meta,
        },
    })
}

/// Draws from a prepared support. A 64-bit word `r` selects the first index
/// whose cumulative weight exceeds `r / 2^64` of the total.
pub fn sample_from(support: &TruncatedSupport, count: usize, seed: u64) -> Vec<Partition> {
    let cumulative = support.cumulative_weights();
    let total = cumulative.last().expect("support is nonempty").clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let threshold = BigInt::from(rng.next_u64()) * &total;
            let i = cumulative.partition_point(|c| (c.clone() << 64u32) <= threshold);
            support.partitions[i].clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;
    use crate::partitions::cl_numerator;

    fn r(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn params_validation() {
        assert!(CLParams::with_default_tolerance(r("1"), r("1/2")).is_err());
        assert!(CLParams::with_default_tolerance(r("1/2"), r("1/2")).is_err());
        assert!(CLParams::with_default_tolerance(r("2"), r("0")).is_err());
        assert!(CLParams::with_default_tolerance(r("2"), r("1")).is_err());
        assert!(CLParams::new(r("2"), r("1/2"), r("0")).is_err());
        let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
        assert!(params.tail_bound() <= params.tail_tolerance());
        let looser = CLParams::new(r("2"), r("1/2"), r("1/100")).unwrap();
        assert!(looser.product_cutoff() < params.product_cutoff());
    }

    #[test]
    fn cutoff_is_minimal() {
        // u^2 q^(1-2I) / (q^2 - 1) at q = 2, u = 1/2: I = 1 gives 1/24, I = 2 gives 1/96.
        let params = CLParams::new(r("2"), r("1/2"), r("1/50")).unwrap();
        assert_eq!(params.product_cutoff(), 2);
        assert_eq!(params.tail_bound(), &r("1/96"));
        assert_eq!(params.truncated_product(), &(r("7/8") * r("31/32")));
    }

    #[test]
    fn off_support_probability_is_zero() {
        let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
        assert!(prob(&p(&[3, 1]), CLFamily::Sp, &params).unwrap().value.is_zero());
        assert!(prob(&p(&[2]), CLFamily::O, &params).unwrap().value.is_zero());
    }

    #[test]
    fn empty_partition_has_the_normalizer() {
        let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
        let v = prob(&Partition::empty(), CLFamily::Sp, &params).unwrap();
        assert_eq!(v.value, params.truncated_product().clone());
    }

    #[test]
    fn single_part_orthogonal() {
        let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
        let v = prob(&p(&[1]), CLFamily::O, &params).unwrap();
        let expected = params.truncated_product() / r("3/2") * r("1/2");
        assert_eq!(v.value, expected);
        assert!(v.lower() < v.value);
    }

    #[test]
    fn marginal_single_partition_cells() {
        let sp = marginal_series(CLFamily::Sp, 2, 4).unwrap();
        assert_eq!(sp.coeff(2), cl_numerator(&p(&[1, 1]), WeightSign::Plus).unwrap().0);
        let o = marginal_series(CLFamily::O, 1, 4).unwrap();
        assert_eq!(o.coeff(1), RationalFunction::one());
        for c in 1..=6 {
            for family in [CLFamily::Sp, CLFamily::O] {
                assert!(marginal_series(family, c, 6).unwrap().coeff(0).is_zero());
            }
        }
        assert_eq!(marginal_series(CLFamily::Sp, 0, 5).unwrap(), TruncatedSeries::one(5));
    }

    #[test]
    fn marginals_match_enumeration() {
        for family in [CLFamily::Sp, CLFamily::O] {
            let report = marginal_vs_bruteforce(family, 2, 8);
            assert!(report.pass, "{}", report.to_text());
            assert_eq!(report.checked, 5 * 9);
        }
    }

    #[test]
    fn normalization_through_order_eight() {
        for family in [CLFamily::Sp, CLFamily::O] {
            let report = normalization_check(family, 8);
            assert!(report.pass, "{}", report.to_text());
            assert_eq!(report.checked, 9);
        }
    }

    #[test]
    fn prefactor_matches_finite_product_at_low_order() {
        // Through u^2 only a single power of each factor contributes.
        let q = RationalFunction::q();
        let s = prefactor_series(&q, CLFamily::Sp, 3).unwrap();
        let x = RationalFunction::q_monomial(-2);
        let expected = -(RationalFunction::q_monomial(-1) / (RationalFunction::one() - x));
        assert_eq!(s.coeff(2), expected);
        assert!(s.coeff(1).is_zero() && s.coeff(3).is_zero());
    }

    #[test]
    fn partial_mass_is_monotone_and_bounded() {
        let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
        let bound = BigRational::one() / (BigRational::one() - params.tail_bound());
        for family in [CLFamily::Sp, CLFamily::O] {
            let mut previous = BigRational::zero();
            for n in 0..=8 {
                let mass = TruncatedSupport::new(family, &params, n).unwrap().mass();
                assert!(mass >= previous);
                assert!(mass <= bound);
                previous = mass;
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let params = CLParams::with_default_tolerance(r("2"), r("1/2")).unwrap();
        let a = sample(CLFamily::Sp, &params, 6, 50, 42).unwrap();
        let b = sample(CLFamily::Sp, &params, 6, 50, 42).unwrap();
        assert_eq!(a, b);
        let c = sample(CLFamily::Sp, &params, 6, 50, 43).unwrap();
        assert_ne!(a.draws, c.draws);
        assert!(sample(CLFamily::O, &params, 6, 0, 1).unwrap().draws.is_empty());
        assert!(a.draws.iter().all(|l| l.size() <= 6 && CLFamily::Sp.constraint().accepts(l)));
        assert!(a.metadata.truncated_mass_bound > 0.0 && a.metadata.truncated_mass_bound < 1.0);
    }

    #[test]
    fn inverse_cdf_boundaries() {
        let params = CLParams::with_default_tolerance(r("3"), r("1/3")).unwrap();
        let support = TruncatedSupport::new(CLFamily::O, &params, 2).unwrap();
        // Support: ∅, (1), (1,1); every draw lands in it.
        assert_eq!(support.partitions.len(), 3);
        let draws = sample_from(&support, 200, 9);
        assert!(draws.iter().all(|d| support.partitions.contains(d)));
        let total: BigRational = support.renormalized().iter().fold(BigRational::zero(), |a, b| a + b);
        assert!(total.is_one());
    }
}

//! Integer partitions, parity-constrained enumeration, and the per-partition
//! weights summed by the identities and the Cohen-Lenstra type measures.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::qseries::pochhammer_table;

/// A weakly decreasing sequence of positive parts, with its statistics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    columns: Vec<u32>,
    multiplicities: BTreeMap<u32, u32>,
    odd_count: u32,
    size: u32,
}

impl Partition {
    /// Sorts the parts into weakly decreasing order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for &p in &parts {
            *multiplicities.entry(p).or_insert(0) += 1;
        }
        let largest = parts.first().copied().unwrap_or(0);
        let columns = (1..=largest)
            .map(|i| parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        let odd_count = parts.iter().filter(|&&p| p % 2 == 1).count() as u32;
        let size = parts.iter().sum();
        Partition {
            parts,
            columns,
            multiplicities,
            odd_count,
            size,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Column lengths `λ'_1 >= λ'_2 >= ...`.
    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    /// `λ'_1`, the number of parts.
    pub fn first_column(&self) -> u32 {
        self.columns.first().copied().unwrap_or(0)
    }

    /// `m_i(λ)` for each part size that occurs.
    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.multiplicities
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.multiplicities.get(&part).copied().unwrap_or(0)
    }

    /// `o(λ)`, the number of odd parts.
    pub fn odd_count(&self) -> u32 {
        self.odd_count
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        Self::from_sorted(self.columns.clone())
    }

    /// `Σ_i (λ'_i)^2`.
    pub fn column_square_sum(&self) -> i64 {
        self.columns.iter().map(|&c| i64::from(c) * i64::from(c)).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(serde::de::Error::custom("parts must be positive and weakly decreasing"));
        }
        Ok(Partition::from_sorted(parts))
    }
}

/// Multiplicity condition on the parts of a partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ParityConstraint {
    /// Every odd part occurs an even number of times.
    OddPartsEvenMultiplicity,
    /// Every even part occurs an even number of times.
    EvenPartsEvenMultiplicity,
    #[default]
    None,
}

impl ParityConstraint {
    /// Whether part size `part` may occur `mult` times.
    pub fn allows(self, part: u32, mult: u32) -> bool {
        match self {
            ParityConstraint::OddPartsEvenMultiplicity => part.is_multiple_of(2) || mult.is_multiple_of(2),
            ParityConstraint::EvenPartsEvenMultiplicity => !part.is_multiple_of(2) || mult.is_multiple_of(2),
            ParityConstraint::None => true,
        }
    }

    pub fn accepts(self, partition: &Partition) -> bool {
        partition
            .multiplicities()
            .iter()
            .all(|(&part, &mult)| self.allows(part, mult))
    }

    pub fn name(self) -> &'static str {
        match self {
            ParityConstraint::OddPartsEvenMultiplicity => "odd-even-mult",
            ParityConstraint::EvenPartsEvenMultiplicity => "even-even-mult",
            ParityConstraint::None => "none",
        }
    }
}

impl FromStr for ParityConstraint {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "odd-even-mult" => Ok(ParityConstraint::OddPartsEvenMultiplicity),
            "even-even-mult" => Ok(ParityConstraint::EvenPartsEvenMultiplicity),
            "none" => Ok(ParityConstraint::None),
            other => Err(format!(
                "unknown constraint {other:?} (expected odd-even-mult, even-even-mult or none)"
            )),
        }
    }
}

/// All partitions of `n` satisfying `constraint`, in descending
/// lexicographic order of their part sequences.
pub fn enumerate(n: u32, constraint: ParityConstraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, constraint, &mut prefix, &mut out);
    out
}

/// All constrained partitions with `|λ| <= max_size`, by size then in
/// [`enumerate`] order.
pub fn enumerate_up_to(max_size: u32, constraint: ParityConstraint) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| enumerate(n, constraint)).collect()
}

fn descend(
    remaining: u32,
    max_part: u32,
    constraint: ParityConstraint,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        for mult in (1..=remaining / part).rev() {
            if !constraint.allows(part, mult) {
                continue;
            }
            let len = prefix.len();
            prefix.extend(std::iter::repeat_n(part, mult as usize));
            descend(remaining - part * mult, part - 1, constraint, prefix, out);
            prefix.truncate(len);
        }
    }
}

/// Sign of the odd-part term in the weight exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightSign {
    /// `+ o(λ)/2`, paired with odd parts of even multiplicity.
    Plus,
    /// `- o(λ)/2`, paired with even parts of even multiplicity.
    Minus,
}

impl WeightSign {
    pub fn as_i64(self) -> i64 {
        match self {
            WeightSign::Plus => 1,
            WeightSign::Minus => -1,
        }
    }
}

/// `½ Σ_i (λ'_i)^2 ± o(λ)/2`, which must be an integer.
pub fn weight_exponent(partition: &Partition, sign: WeightSign) -> Result<i64> {
    let twice = partition.column_square_sum() + sign.as_i64() * i64::from(partition.odd_count());
    if twice % 2 != 0 {
        return Err(Error::NonIntegralExponent {
            partition: partition.to_string(),
            numerator: twice,
        });
    }
    Ok(twice / 2)
}

/// Precomputed `q` powers and `(1/q^2; 1/q^2)_k` used by the weight formulas.
#[derive(Clone, Debug)]
pub struct WeightContext<F> {
    q: F,
    half_pochhammer: Vec<F>,
}

impl<F: Scalar> WeightContext<F> {
    /// Supports partitions of size up to `max_size`.
    pub fn new(q: F, max_size: u32) -> Result<Self> {
        let x = q.powi(-2)?;
        let half_pochhammer = pochhammer_table(&x, &x, max_size / 2 + 1);
        Ok(WeightContext { q, half_pochhammer })
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `(1/q^2; 1/q^2)_k`.
    pub fn half_pochhammer(&self, k: u32) -> &F {
        &self.half_pochhammer[k as usize]
    }

    /// `1 / (q^e ∏_i (1/q^2;1/q^2)_{⌊m_i/2⌋})`: the λ-dependent factor of
    /// the measure, without `u^|λ|`.
    pub fn cl_numerator(&self, partition: &Partition, sign: WeightSign) -> Result<F> {
        let e = weight_exponent(partition, sign)?;
        let mut den = self.q.powi(e)?;
        for &m in partition.multiplicities().values() {
            if m >= 2 {
                den = den * self.half_pochhammer(m / 2);
            }
        }
        Ok(den.try_inv()?)
    }

    /// `(1 - q^-λ'_1)` times [`cl_numerator`](Self::cl_numerator).
    pub fn summand_weight(&self, partition: &Partition, sign: WeightSign) -> Result<F> {
        if partition.is_empty() {
            weight_exponent(partition, sign)?;
            return Ok(F::zero());
        }
        let lead = F::one() - &self.q.powi(-i64::from(partition.first_column()))?;
        Ok(lead * &self.cl_numerator(partition, sign)?)
    }
}

fn symbolic_context(partition: &Partition) -> Result<WeightContext<RationalFunction>> {
    WeightContext::new(RationalFunction::q(), partition.size())
}

/// The summand of the partition-side sums, in `Q(q)`.
pub fn summand_weight(partition: &Partition, sign: WeightSign) -> Result<RationalFunction> {
    symbolic_context(partition)?.summand_weight(partition, sign)
}

/// The λ-dependent factor of the measure together with the power of `u`.
pub fn cl_numerator(partition: &Partition, sign: WeightSign) -> Result<(RationalFunction, u32)> {
    let coeff = symbolic_context(partition)?.cl_numerator(partition, sign)?;
    Ok((coeff, partition.size()))
}

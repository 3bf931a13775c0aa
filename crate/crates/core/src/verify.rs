//! Named groups of checks, as run by `qident verify`.

use std::fmt;
use std::str::FromStr;

use crate::arith::{BigRational, RationalFunction};
use crate::distributions::{marginal_vs_bruteforce, normalization_check, CLFamily};
use crate::identities::*;
use crate::qseries::{
    coeff_lemma_check, qbinomial_check, random_limit_transform_suite, random_qchu_suite,
    random_transform_suite, RandomSuite,
};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    Anz1,
    Anz2,
    Anz3,
    /// The first derivation: its target equation, the two closed sums and
    /// their recombination.
    Eq4,
    /// The second derivation: its target equation and the two closed sums.
    Eq5,
    /// Bridges to enumeration and termwise identities.
    Splits,
    QSeries,
    Marginals,
    Normalization,
    All,
}

impl Selector {
    pub const ALL: [Selector; 10] = [
        Selector::Anz1,
        Selector::Anz2,
        Selector::Anz3,
        Selector::Eq4,
        Selector::Eq5,
        Selector::Splits,
        Selector::QSeries,
        Selector::Marginals,
        Selector::Normalization,
        Selector::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::Anz1 => "anz1",
            Selector::Anz2 => "anz2",
            Selector::Anz3 => "anz3",
            Selector::Eq4 => "eq4",
            Selector::Eq5 => "eq5",
            Selector::Splits => "splits",
            Selector::QSeries => "qseries",
            Selector::Marginals => "marginals",
            Selector::Normalization => "normalization",
            Selector::All => "all",
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Selector::ALL
            .into_iter()
            .find(|sel| sel.name() == s)
            .ok_or_else(|| format!("unknown selector {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `m` for the identity checks.
    pub m_max: u32,
    /// Series order in `u` for marginal and normalization checks.
    pub order: usize,
    /// Random parameter suites for the `2phi1` evaluations.
    pub random: RandomSuite,
    /// Largest `k` for the coefficient lemma, with `m <= order`.
    pub lemma_k_max: u32,
    /// Marginals compare first columns up to `2 * marginal_k_max`.
    pub marginal_k_max: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            m_max: 10,
            order: 12,
            random: RandomSuite::default(),
            lemma_k_max: 6,
            marginal_k_max: 3,
        }
    }
}

fn qbinomial_bases() -> Vec<RationalFunction> {
    vec![
        RationalFunction::q_monomial(-2),
        RationalFunction::q() + RationalFunction::from_integer(2),
        RationalFunction::constant(BigRational::new(2.into(), 7.into())),
    ]
}

/// Runs the checks behind `selector`, in a fixed order.
pub fn run(selector: Selector, config: &VerifyConfig) -> Vec<VerificationReport> {
    let m = config.m_max;
    match selector {
        Selector::Anz1 => vec![check_anz1(m)],
        Selector::Anz2 => vec![check_anz2(m)],
        Selector::Anz3 => vec![check_anz3(m)],
        Selector::Eq4 => vec![check_eq4(m), check_a2_sum(m), check_b2_sum(m), check_final_combine(m)],
        Selector::Eq5 => vec![check_eq5(m), check_c1_sum(m), check_c2_sum(m)],
        Selector::Splits => vec![
            check_bridge_ab(m),
            check_bridge_c(m),
            check_bridge_d(m),
            check_ab_split(m),
            check_c_split(m),
            check_d_eq_b2(m),
            check_c2_neg_b2(m),
            check_absorption(m),
        ],
        Selector::QSeries => vec![
            random_qchu_suite(&config.random),
            random_transform_suite(&config.random),
            random_limit_transform_suite(&config.random),
            qbinomial_check(&qbinomial_bases(), config.lemma_k_max, config.order),
            coeff_lemma_check(config.lemma_k_max, config.order as u32),
        ],
        Selector::Marginals => [CLFamily::Sp, CLFamily::O]
            .into_iter()
            .map(|f| marginal_vs_bruteforce(f, config.marginal_k_max, config.order))
            .collect(),
        Selector::Normalization => [CLFamily::Sp, CLFamily::O]
            .into_iter()
            .map(|f| normalization_check(f, config.order))
            .collect(),
        Selector::All => Selector::ALL[..Selector::ALL.len() - 1]
            .iter()
            .flat_map(|&s| run(s, config))
            .collect(),
    }
}

/// Every check with `m <= m_max` and the remaining settings at their defaults.
pub fn verify_all(m_max: u32) -> Vec<VerificationReport> {
    let config = VerifyConfig {
        m_max,
        ..VerifyConfig::default()
    };
    run(Selector::All, &config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selector_names_round_trip() {
        for s in Selector::ALL {
            assert_eq!(s.name().parse::<Selector>().unwrap(), s);
        }
        assert!("anz4".parse::<Selector>().is_err());
    }

    #[test]
    fn all_covers_every_group() {
        let config = VerifyConfig {
            m_max: 2,
            order: 4,
            random: RandomSuite { n_max: 2, per_n: 3, seed: 1 },
            lemma_k_max: 2,
            marginal_k_max: 1,
        };
        let reports = run(Selector::All, &config);
        let expected: usize = Selector::ALL[..9].iter().map(|&s| run(s, &config).len()).sum();
        assert_eq!(reports.len(), expected);
        for r in &reports {
            assert!(r.pass, "{}", r.to_text());
        }
    }
}

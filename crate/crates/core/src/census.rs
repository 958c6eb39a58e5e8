//! Exhaustive distribution census for scalar threshold polynomials.
//!
//! For `f(x) = c + a_1 x + ... + a_{t-1} x^{t-1}` over a small field, every
//! constant `c` and every choice of the higher coefficients is enumerated.
//! For each unauthorized subset of `t - 1` participants the census records
//! the histogram of the values they observe, separately per constant.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::params::validate_threshold;
use crate::poly::{SymbolVector, VectorPolynomial};

pub const CENSUS_LIMIT: u128 = 1 << 22;

/// Observations of one participant subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCensus {
    /// Participant indices (1-based).
    pub indices: Vec<usize>,
    /// For each constant term, how often each observed value tuple occurs.
    pub conditionals: Vec<(u8, BTreeMap<Vec<u8>, u64>)>,
}

impl SubsetCensus {
    /// Every constant induces the same distribution of observations.
    pub fn is_independent_of_constant(&self) -> bool {
        self.conditionals.windows(2).all(|w| w[0].1 == w[1].1)
    }

    /// Every constant induces exactly the uniform distribution: each tuple in
    /// `F^{|indices|}` appears exactly `per_tuple` times.
    pub fn is_uniform(&self, field: Field, per_tuple: u64) -> bool {
        let tuples = u64::from(field.order()).pow(self.indices.len() as u32);
        self.conditionals.iter().all(|(_, hist)| {
            hist.len() as u64 == tuples && hist.values().all(|&c| c == per_tuple)
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeakageCensus {
    pub field: Field,
    pub t: usize,
    pub n: usize,
    pub subsets: Vec<SubsetCensus>,
}

impl LeakageCensus {
    /// Perfect secrecy: no unauthorized subset's view depends on the constant.
    pub fn is_perfect(&self) -> bool {
        self.subsets.iter().all(SubsetCensus::is_independent_of_constant)
    }

    /// For every constant, each unauthorized view is hit exactly once as the
    /// higher coefficients range over `F^{t-1}`: the map is a bijection.
    pub fn is_uniform(&self) -> bool {
        self.subsets.iter().all(|s| s.is_uniform(self.field, 1))
    }
}

pub(crate) fn polynomial_census(field: Field, t: usize, n: usize) -> Result<LeakageCensus> {
    validate_threshold(t, n, field)?;
    let q = u128::from(field.order());
    let subsets: Vec<Vec<usize>> = (1..=n).combinations(t - 1).collect();
    let size = q.pow(t as u32) * subsets.len() as u128;
    if size > CENSUS_LIMIT {
        return Err(Error::SpaceTooLarge {
            size,
            limit: CENSUS_LIMIT,
        });
    }
    let q = u64::from(field.order());
    let combos = q.pow(t as u32 - 1);
    // goes through the same evaluation path the schemes use
    let eval = |constant: u8, higher: &[u8], x: FieldElement| -> Result<u8> {
        let coefficients = std::iter::once(constant)
            .chain(higher.iter().copied())
            .map(|c| SymbolVector::new(field, vec![c]))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorPolynomial::new(coefficients)?.eval(x)?.symbols()[0])
    };
    let subsets = subsets
        .into_iter()
        .map(|indices| {
            let points: Vec<FieldElement> = indices
                .iter()
                .map(|&i| FieldElement::from_index(i, field))
                .collect::<Result<_>>()?;
            let conditionals = field
                .elements()
                .map(|constant| {
                    let mut hist = BTreeMap::new();
                    for code in 0..combos {
                        let higher: Vec<u8> = (0..t - 1)
                            .map(|k| (code / q.pow(k as u32) % q) as u8)
                            .collect();
                        let view = points
                            .iter()
                            .map(|&x| eval(constant, &higher, x))
                            .collect::<Result<Vec<u8>>>()?;
                        *hist.entry(view).or_insert(0) += 1;
                    }
                    Ok((constant, hist))
                })
                .collect::<Result<_>>()?;
            Ok(SubsetCensus {
                indices,
                conditionals,
            })
        })
        .collect::<Result<_>>()?;
    Ok(LeakageCensus {
        field,
        t,
        n,
        subsets,
    })
}

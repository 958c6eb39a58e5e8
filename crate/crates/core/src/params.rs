use crate::error::{Error, Result};
use crate::gf::Field;

/// Checks `1 <= t <= n <= q - 1`.
pub fn validate_threshold(t: usize, n: usize, field: Field) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidParameters("threshold t must be at least 1".into()));
    }
    if t > n {
        return Err(Error::InvalidParameters(format!(
            "threshold t={t} exceeds participant count n={n}"
        )));
    }
    if n > field.max_participants() {
        return Err(Error::EvaluationPointsExhausted { index: n, field });
    }
    Ok(())
}

/// Rejects duplicate indices among all supplied items, then checks there are
/// at least `t` of them. Returns the positions of the first `t`.
pub(crate) fn select_threshold(indices: &[usize], t: usize) -> Result<Vec<usize>> {
    let mut seen = std::collections::HashSet::with_capacity(indices.len());
    for &i in indices {
        if !seen.insert(i) {
            return Err(Error::DuplicateIndex(i));
        }
    }
    if indices.len() < t || t == 0 {
        return Err(Error::InsufficientShares {
            required: t,
            got: indices.len(),
        });
    }
    Ok((0..t).collect())
}

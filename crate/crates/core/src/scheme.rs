//! Scheme-agnostic entry points over byte secrets.

use rand::RngCore;

use crate::cipher::CipherSuite;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::share::{common_header, SchemeId, Share};
use crate::{pets, shamir, ssms};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchemeParams {
    pub scheme: SchemeId,
    pub t: usize,
    pub n: usize,
    pub field: Field,
    /// Ignored by Shamir.
    pub suite: CipherSuite,
}

pub fn split(secret: &[u8], params: &SchemeParams, rng: &mut dyn RngCore) -> Result<Vec<Share>> {
    let SchemeParams {
        scheme,
        t,
        n,
        field,
        suite,
    } = *params;
    match scheme {
        SchemeId::Shamir => shamir::split(secret, t, n, field, rng),
        SchemeId::Ssms => ssms::ssms_split(secret, t, n, suite, field, rng),
        SchemeId::Pets => pets::pets_split(secret, t, n, suite, field, rng),
    }
}

/// Dispatches on the scheme recorded in the share headers.
pub fn reconstruct(shares: &[Share]) -> Result<Vec<u8>> {
    let header = common_header(shares)?;
    if shares.len() < header.threshold() {
        return Err(Error::InsufficientShares {
            required: header.threshold(),
            got: shares.len(),
        });
    }
    match header.scheme {
        SchemeId::Shamir => shamir::reconstruct(shares),
        SchemeId::Ssms => ssms::ssms_reconstruct(shares),
        SchemeId::Pets => pets::pets_reconstruct(shares),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn dispatch_round_trip() {
        let mut rng = ChaCha20Rng::seed_from_u64(40);
        for scheme in SchemeId::ALL {
            let params = SchemeParams {
                scheme,
                t: 2,
                n: 3,
                field: Field::Gf256,
                suite: CipherSuite::TestKeystream,
            };
            let shares = split(b"dispatch me", &params, &mut rng).unwrap();
            assert!(shares.iter().all(|s| s.header.scheme == scheme));
            assert_eq!(reconstruct(&shares[1..]).unwrap(), b"dispatch me");
            assert!(matches!(
                reconstruct(&shares[..1]),
                Err(Error::InsufficientShares { required: 2, got: 1 })
            ));
        }
    }

    #[test]
    fn mixed_schemes_are_incompatible() {
        let mut rng = ChaCha20Rng::seed_from_u64(41);
        let base = SchemeParams {
            scheme: SchemeId::Pets,
            t: 2,
            n: 3,
            field: Field::Gf256,
            suite: CipherSuite::TestKeystream,
        };
        let a = split(b"x", &base, &mut rng).unwrap();
        let b = split(b"x", &SchemeParams { scheme: SchemeId::Ssms, ..base }, &mut rng).unwrap();
        assert!(matches!(
            reconstruct(&[a[0].clone(), b[1].clone()]),
            Err(Error::IncompatibleShares(_))
        ));
    }
}

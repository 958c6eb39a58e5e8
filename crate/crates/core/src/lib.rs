//! Threshold secret sharing over GF(4) and GF(256).
//!
//! Three schemes share one field, polynomial, cipher and dispersal layer so
//! that their share sizes can be compared directly:
//!
//! * [`shamir`]: information-theoretic, every share as large as the secret.
//! * [`ssms`]: encrypt, Shamir-share the key, disperse the ciphertext;
//!   `|K| + |S|/t` symbols per share.
//! * [`pets`]: encrypt, hide the key as the constant term of a polynomial
//!   whose other coefficients are ciphertext blocks, disperse the rest;
//!   `(|S| + |K|)/t` symbols per share.
//!
//! [`metrics`] computes payloads and information rates from the live
//! geometry of each scheme, and [`share`] defines the share file format.

pub mod census;
pub mod cipher;
pub mod error;
pub mod gf;
pub mod ida;
pub mod metrics;
pub mod params;
pub mod pets;
pub mod poly;
pub mod scheme;
pub mod shamir;
pub mod share;
pub mod ssms;

pub use cipher::{Cipher, CipherSuite, SecretKey};
pub use error::{Error, Result};
pub use gf::{Field, FieldElement, FieldSpec};
pub use poly::{SymbolVector, VectorPolynomial};
pub use scheme::{reconstruct, split, SchemeParams};
pub use share::{SchemeId, Share, ShareHeader};

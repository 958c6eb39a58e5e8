//! Length-preserving encryption suites.
//!
//! Every suite XORs the message with a keystream derived from the key, so
//! `|Enc(K, S)| = |S|` and decryption is the same operation. Encryption is
//! deterministic: each key is used for exactly one sharing, and no nonce is
//! mixed in (the share header reserves room for one).
//!
//! * `toy-otp`: one-byte key, keystream is the key byte repeated. At the 8-bit
//!   message scale this is exactly a one-time pad, which makes exhaustive key
//!   property checks cheap.
//! * `test-keystream`: 256-bit key, counter-mode keystream from a SplitMix64
//!   style mixer. Fully specified here so regression vectors never move.
//! * `stream256`: 256-bit key ChaCha20 with an all-zero nonce.

use std::fmt;
use std::str::FromStr;

use chacha20::cipher::{KeyIvInit, StreamCipher};
use chacha20::ChaCha20;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::SymbolVector;

/// Key material for one sharing.
#[derive(Clone, PartialEq, Eq)]
pub struct SecretKey {
    bytes: Vec<u8>,
}

impl SecretKey {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        SecretKey { bytes }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// The key as `8 * len / m` field symbols.
    pub fn to_symbols(&self, field: Field) -> SymbolVector {
        SymbolVector::from_bytes(field, &self.bytes)
    }

    pub fn from_symbols(symbols: &SymbolVector) -> Self {
        SecretKey {
            bytes: symbols.to_bytes(),
        }
    }
}

impl fmt::Debug for SecretKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SecretKey({} bytes)", self.bytes.len())
    }
}

/// A length-preserving symmetric cipher.
pub trait Cipher {
    /// Key size in bytes.
    fn key_len(&self) -> usize;

    fn encrypt(&self, key: &SecretKey, plaintext: &[u8]) -> Vec<u8>;

    /// Stream ciphers accept any input; the error path is reserved for
    /// authenticated constructions.
    fn decrypt(&self, key: &SecretKey, ciphertext: &[u8]) -> Result<Vec<u8>>;

    /// Draws `key_len` bytes from `rng`.
    fn keygen(&self, rng: &mut dyn RngCore) -> Result<SecretKey> {
        let mut bytes = vec![0u8; self.key_len()];
        rng.try_fill_bytes(&mut bytes)
            .map_err(|e| Error::Rng(e.to_string()))?;
        Ok(SecretKey { bytes })
    }
}

/// The suites that can appear in a share header.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CipherSuite {
    ToyOtp,
    TestKeystream,
    Stream256,
}

impl CipherSuite {
    pub const ALL: [CipherSuite; 3] = [
        CipherSuite::ToyOtp,
        CipherSuite::TestKeystream,
        CipherSuite::Stream256,
    ];

    pub const fn id(self) -> u8 {
        match self {
            CipherSuite::ToyOtp => 0x01,
            CipherSuite::TestKeystream => 0x02,
            CipherSuite::Stream256 => 0x03,
        }
    }

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            0x01 => Ok(CipherSuite::ToyOtp),
            0x02 => Ok(CipherSuite::TestKeystream),
            0x03 => Ok(CipherSuite::Stream256),
            other => Err(Error::UnknownSuite(other)),
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            CipherSuite::ToyOtp => "toy-otp",
            CipherSuite::TestKeystream => "test-keystream",
            CipherSuite::Stream256 => "stream256",
        }
    }

    /// Suites whose output is reproducible without an external crypto library.
    pub const fn is_test_suite(self) -> bool {
        !matches!(self, CipherSuite::Stream256)
    }

    fn keystream(self, key: &SecretKey, len: usize) -> Vec<u8> {
        assert_eq!(key.len(), self.key_len(), "key length does not match suite {self}");
        match self {
            CipherSuite::ToyOtp => key.as_bytes().iter().copied().cycle().take(len).collect(),
            CipherSuite::TestKeystream => test_keystream(key.as_bytes(), len),
            CipherSuite::Stream256 => {
                let mut buf = vec![0u8; len];
                let mut chacha = ChaCha20::new(key.as_bytes().into(), &[0u8; 12].into());
                chacha.apply_keystream(&mut buf);
                buf
            }
        }
    }
}

impl Cipher for CipherSuite {
    fn key_len(&self) -> usize {
        match self {
            CipherSuite::ToyOtp => 1,
            CipherSuite::TestKeystream | CipherSuite::Stream256 => 32,
        }
    }

    fn encrypt(&self, key: &SecretKey, plaintext: &[u8]) -> Vec<u8> {
        let mut out = self.keystream(key, plaintext.len());
        out.iter_mut().zip(plaintext).for_each(|(k, p)| *k ^= p);
        out
    }

    fn decrypt(&self, key: &SecretKey, ciphertext: &[u8]) -> Result<Vec<u8>> {
        Ok(self.encrypt(key, ciphertext))
    }
}

impl fmt::Display for CipherSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CipherSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CipherSuite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown cipher suite `{s}`")))
    }
}

const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Keystream block `counter` (8 bytes) for a 32-byte key. Blocks are
/// independent of each other so any offset can be computed directly.
fn test_keystream_block(words: &[u64; 4], counter: u64) -> u64 {
    let a = mix64(words[0].wrapping_add(counter.wrapping_mul(GAMMA)));
    let b = mix64(a ^ words[1]);
    let c = mix64(b.wrapping_add(words[2]));
    c ^ mix64(words[3] ^ counter.rotate_left(32))
}

fn test_keystream(key: &[u8], len: usize) -> Vec<u8> {
    let mut words = [0u64; 4];
    for (w, chunk) in words.iter_mut().zip(key.chunks_exact(8)) {
        *w = u64::from_le_bytes(chunk.try_into().expect("8-byte chunk"));
    }
    let mut out = Vec::with_capacity(len + 8);
    let mut counter = 0u64;
    while out.len() < len {
        out.extend_from_slice(&test_keystream_block(&words, counter).to_le_bytes());
        counter += 1;
    }
    out.truncate(len);
    out
}

/// Largest key or message the non-redundancy search will enumerate, in bits.
pub const NON_REDUNDANT_MAX_BITS: usize = 16;

/// Exhaustively decides whether every key bit matters: for every key `k` and
/// bit `i` there must be a message `m` of `msg_len` bytes with
/// `Dec(k ^ e_i, Enc(k, m)) != m`.
pub fn check_non_redundant<C: Cipher + ?Sized>(cipher: &C, msg_len: usize) -> Result<bool> {
    let key_bits = cipher.key_len() * 8;
    let msg_bits = msg_len * 8;
    if key_bits > NON_REDUNDANT_MAX_BITS || msg_bits > NON_REDUNDANT_MAX_BITS {
        return Err(Error::SpaceTooLarge {
            size: 1u128 << (key_bits + msg_bits).min(127),
            limit: 1u128 << (2 * NON_REDUNDANT_MAX_BITS),
        });
    }
    let to_bytes = |v: u64, len: usize| -> Vec<u8> { v.to_le_bytes()[..len].to_vec() };
    for k in 0..(1u64 << key_bits) {
        let key = SecretKey::from_bytes(to_bytes(k, cipher.key_len()));
        for bit in 0..key_bits {
            let flipped = SecretKey::from_bytes(to_bytes(k ^ (1 << bit), cipher.key_len()));
            let witnessed = (0..(1u64 << msg_bits)).any(|m| {
                let m = to_bytes(m, msg_len);
                let c = cipher.encrypt(&key, &m);
                cipher.decrypt(&flipped, &c).map_or(true, |d| d != m)
            });
            if !witnessed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

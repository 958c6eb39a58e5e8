//! Polynomials whose coefficients are symbol vectors.
//!
//! A `VectorPolynomial` with coefficients of width `L` is `L` independent scalar
//! polynomials sharing one set of evaluation points. Evaluation and
//! interpolation walk the coefficient vectors position by position, so this is
//! the common engine under Shamir sharing, SSMS, PETS and the Reed-Solomon
//! dispersal.

use rand::RngCore;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

/// A fixed-length sequence of symbols from one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolVector {
    field: Field,
    symbols: Vec<u8>,
}

impl SymbolVector {
    pub fn new(field: Field, symbols: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| u16::from(s) >= field.order()) {
            return Err(Error::ElementOutOfRange { value: bad, field });
        }
        Ok(SymbolVector { field, symbols })
    }

    pub fn zeros(field: Field, len: usize) -> Self {
        SymbolVector {
            field,
            symbols: vec![0; len],
        }
    }

    /// `len` uniform symbols drawn from `rng`.
    pub fn random(field: Field, len: usize, rng: &mut dyn RngCore) -> Result<Self> {
        let mut symbols = vec![0u8; len];
        rng.try_fill_bytes(&mut symbols)
            .map_err(|e| Error::Rng(e.to_string()))?;
        let mask = (field.order() - 1) as u8;
        symbols.iter_mut().for_each(|s| *s &= mask);
        Ok(SymbolVector { field, symbols })
    }

    /// Unpacks a byte string under the field's packing rule.
    pub fn from_bytes(field: Field, bytes: &[u8]) -> Self {
        SymbolVector {
            field,
            symbols: field.unpack(bytes),
        }
    }

    /// Packs back into bytes; a trailing partial byte is zero-filled.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.field.pack(&self.symbols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn get(&self, i: usize) -> Option<FieldElement> {
        self.symbols
            .get(i)
            .map(|&v| self.field.element(v).expect("symbols are validated on construction"))
    }

    fn check_compatible(&self, other: &SymbolVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    /// Component-wise sum.
    pub fn add(&self, other: &SymbolVector) -> Result<SymbolVector> {
        self.check_compatible(other)?;
        let symbols = self
            .symbols
            .iter()
            .zip(&other.symbols)
            .map(|(&a, &b)| a ^ b)
            .collect();
        Ok(SymbolVector {
            field: self.field,
            symbols,
        })
    }

    /// Multiplies every component by `c`.
    pub fn scale(&self, c: FieldElement) -> Result<SymbolVector> {
        if c.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: c.field(),
            });
        }
        let field = self.field;
        let symbols = self.symbols.iter().map(|&s| field.mul(s, c.value())).collect();
        Ok(SymbolVector { field, symbols })
    }

    /// Symbols `[start, end)` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> SymbolVector {
        SymbolVector {
            field: self.field,
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    /// Appends `other`'s symbols.
    pub fn extend(&mut self, other: &SymbolVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        self.symbols.extend_from_slice(&other.symbols);
        Ok(())
    }

    pub fn concat<'a>(field: Field, parts: impl IntoIterator<Item = &'a SymbolVector>) -> Result<SymbolVector> {
        let mut out = SymbolVector::zeros(field, 0);
        for part in parts {
            out.extend(part)?;
        }
        Ok(out)
    }

    pub(crate) fn resize(&mut self, len: usize) {
        self.symbols.resize(len, 0);
    }

    pub(crate) fn truncate(&mut self, len: usize) {
        self.symbols.truncate(len);
    }
}

/// `c_0 + c_1 x + ... + c_{d} x^{d}` with every `c_j` a `SymbolVector` of one width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorPolynomial {
    field: Field,
    width: usize,
    coefficients: Vec<SymbolVector>,
}

impl VectorPolynomial {
    /// Coefficients are given constant term first.
    pub fn new(coefficients: Vec<SymbolVector>) -> Result<Self> {
        let first = coefficients
            .first()
            .ok_or_else(|| Error::InvalidParameters("polynomial needs at least one coefficient".into()))?;
        let (field, width) = (first.field(), first.len());
        for c in &coefficients[1..] {
            first.check_compatible(c)?;
        }
        Ok(VectorPolynomial {
            field,
            width,
            coefficients,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Symbol width of each coefficient.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of coefficients (degree bound + 1).
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[SymbolVector] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<SymbolVector> {
        self.coefficients
    }

    pub fn constant_term(&self) -> &SymbolVector {
        &self.coefficients[0]
    }

    /// Horner evaluation at `x`, all positions at once.
    pub fn eval(&self, x: FieldElement) -> Result<SymbolVector> {
        if x.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: x.field(),
            });
        }
        let field = self.field;
        let x = x.value();
        let mut acc = vec![0u8; self.width];
        for coeff in self.coefficients.iter().rev() {
            for (a, &c) in acc.iter_mut().zip(coeff.symbols()) {
                *a = field.mul(*a, x) ^ c;
            }
        }
        Ok(SymbolVector { field, symbols: acc })
    }

    /// The unique polynomial with `points.len()` coefficients through `points`.
    pub fn interpolate(points: &[(FieldElement, SymbolVector)]) -> Result<Self> {
        let (field, width) = check_points(points)?;
        let xs: Vec<u8> = points.iter().map(|(x, _)| x.value()).collect();
        let k = xs.len();
        let mut coefficients = vec![vec![0u8; width]; k];
        for (i, (_, y)) in points.iter().enumerate() {
            let basis = lagrange_basis(field, &xs, i)?;
            for (coeff, &b) in coefficients.iter_mut().zip(&basis) {
                if b == 0 {
                    continue;
                }
                for (c, &s) in coeff.iter_mut().zip(y.symbols()) {
                    *c ^= field.mul(b, s);
                }
            }
        }
        Ok(VectorPolynomial {
            field,
            width,
            coefficients: coefficients
                .into_iter()
                .map(|symbols| SymbolVector { field, symbols })
                .collect(),
        })
    }

    /// `f(0)` of the interpolating polynomial, without building the other coefficients.
    pub fn interpolate_constant(points: &[(FieldElement, SymbolVector)]) -> Result<SymbolVector> {
        let (field, width) = check_points(points)?;
        let xs: Vec<u8> = points.iter().map(|(x, _)| x.value()).collect();
        let weights = lagrange_weights_at_zero(field, &xs)?;
        let mut acc = vec![0u8; width];
        for (&w, (_, y)) in weights.iter().zip(points) {
            for (a, &s) in acc.iter_mut().zip(y.symbols()) {
                *a ^= field.mul(w, s);
            }
        }
        Ok(SymbolVector { field, symbols: acc })
    }
}

fn check_points(points: &[(FieldElement, SymbolVector)]) -> Result<(Field, usize)> {
    let (x0, y0) = points
        .first()
        .ok_or_else(|| Error::InvalidParameters("interpolation needs at least one point".into()))?;
    let field = x0.field();
    let mut seen = [false; 256];
    for (x, y) in points {
        if x.field() != field || y.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: if x.field() != field { x.field() } else { y.field() },
            });
        }
        if y.len() != y0.len() {
            return Err(Error::LengthMismatch {
                expected: y0.len(),
                got: y.len(),
            });
        }
        let slot = &mut seen[usize::from(x.value())];
        if *slot {
            return Err(Error::DuplicateIndex(usize::from(x.value())));
        }
        *slot = true;
    }
    Ok((field, y0.len()))
}

/// Coefficients (constant first) of the Lagrange basis polynomial for `xs[i]`.
fn lagrange_basis(field: Field, xs: &[u8], i: usize) -> Result<Vec<u8>> {
    let mut numer = vec![1u8];
    let mut denom = 1u8;
    for (j, &xj) in xs.iter().enumerate() {
        if j == i {
            continue;
        }
        // multiply by (x - xj) = (x + xj)
        let mut next = vec![0u8; numer.len() + 1];
        for (k, &c) in numer.iter().enumerate() {
            next[k] ^= field.mul(c, xj);
            next[k + 1] ^= c;
        }
        numer = next;
        denom = field.mul(denom, xs[i] ^ xj);
    }
    let scale = field.inv(denom)?;
    Ok(numer.into_iter().map(|c| field.mul(c, scale)).collect())
}

/// Weights `w_i` with `f(0) = sum w_i f(x_i)` for any polynomial with `xs.len()` coefficients.
pub fn lagrange_weights_at_zero(field: Field, xs: &[u8]) -> Result<Vec<u8>> {
    xs.iter()
        .enumerate()
        .map(|(i, &xi)| {
            let mut numer = 1u8;
            let mut denom = 1u8;
            for (j, &xj) in xs.iter().enumerate() {
                if j != i {
                    numer = field.mul(numer, xj);
                    denom = field.mul(denom, xi ^ xj);
                }
            }
            field.div(numer, denom)
        })
        .collect()
}

//! Finite linear combinations of basis keys with exact rational
//! coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{ParseError, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A linear combination `Σ c_k · k`. Zero coefficients are never stored,
/// so structural equality is coefficient-wise equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 · key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(key, coeff);
        s
    }

    /// Sums repeated keys and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut s = Self::zero();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, other: &Self, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, coeff: &Rational) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
        }
    }

    /// Linear extension of `f` from keys to sums.
    pub fn map_linear<K2, E, F>(&self, mut f: F) -> Result<FormalSum<K2>, E>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Result<FormalSum<K2>, E>,
    {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Bilinear extension of `f`: `(Σ aᵢxᵢ, Σ bⱼyⱼ) ↦ Σ aᵢbⱼ f(xᵢ, yⱼ)`.
    pub fn bilinear<K2, K3, E, F>(
        &self,
        other: &FormalSum<K2>,
        mut f: F,
    ) -> Result<FormalSum<K3>, E>
    where
        K2: Ord + Clone,
        K3: Ord + Clone,
        F: FnMut(&K, &K2) -> Result<FormalSum<K3>, E>,
    {
        let mut out = FormalSum::zero();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                out.add_scaled(&f(x, y)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// Prints `c1*K1 + c2*K2 - ...`; unit coefficients are omitted and the
    /// empty sum prints `0`.
    pub fn to_text(&self, mut key: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&key(k));
        }
        out
    }

    pub fn to_json_terms(&self, mut key: impl FnMut(&K) -> String) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(k, c)| JsonTerm {
                coeff: format!("{}/{}", c.numer(), c.denom()),
                key: key(k),
            })
            .collect()
    }

    pub fn from_json_terms<E>(
        terms: &[JsonTerm],
        mut key: impl FnMut(&str) -> Result<K, E>,
    ) -> Result<Self, E>
    where
        E: From<ParseError>,
    {
        let mut out = Self::zero();
        for t in terms {
            let coeff = parse_rational(&t.coeff)?;
            out.add_term(key(&t.key)?, coeff);
        }
        Ok(out)
    }
}

/// One entry of the JSON form `[{"coeff": "p/q", "key": "..."}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub key: String,
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| ParseError::new(0, format!("invalid numerator `{numer}`")))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|_| ParseError::new(0, format!("invalid denominator `{denom}`")))?;
    if denom.is_zero() {
        return Err(ParseError::new(0, "zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(ToString::to_string))
    }
}

impl<K: Ord + Clone> AddAssign<&FormalSum<K>> for FormalSum<K> {
    fn add_assign(&mut self, rhs: &FormalSum<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&FormalSum<K>> for FormalSum<K> {
    fn sub_assign(&mut self, rhs: &FormalSum<K>) {
        for (k, c) in &rhs.terms {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add for &FormalSum<K> {
    type Output = FormalSum<K>;

    fn add(self, rhs: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for FormalSum<K> {
    type Output = FormalSum<K>;

    fn add(mut self, rhs: FormalSum<K>) -> FormalSum<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &FormalSum<K> {
    type Output = FormalSum<K>;

    fn sub(self, rhs: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for FormalSum<K> {
    type Output = FormalSum<K>;

    fn sub(mut self, rhs: FormalSum<K>) -> FormalSum<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &FormalSum<K> {
    type Output = FormalSum<K>;

    fn neg(self) -> FormalSum<K> {
        FormalSum {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl<K: Ord + Clone> Neg for FormalSum<K> {
    type Output = FormalSum<K>;

    fn neg(self) -> FormalSum<K> {
        -&self
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

//! The Burnside ring `A(G) = Z[Φ_0(G)]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit_types::{Ambient, OrbitType};

/// Sparse integer combination of orbit types. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    terms: BTreeMap<OrbitType, i64>,
}

impl BurnsideElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `(G)`.
    pub fn unit(amb: &Ambient) -> Self {
        Self::generator(amb.whole())
    }

    pub fn generator(t: OrbitType) -> Self {
        Self::from_terms([(t, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (OrbitType, i64)>) -> Self {
        let mut out = Self::zero();
        for (t, c) in terms {
            out.add_term(t, c);
        }
        out
    }

    pub fn add_term(&mut self, t: OrbitType, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(t) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
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

    pub fn coeff(&self, t: &OrbitType) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OrbitType, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &OrbitType> {
        self.terms.keys()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, &c) in &other.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(t, &c)| (t.clone(), c * k)))
    }

    /// Bilinear extension of the generator product.
    pub fn multiply(&self, other: &Self, amb: &Ambient) -> Result<Self> {
        let mut out = Self::zero();
        for (h, &a) in &self.terms {
            for (k, &b) in &other.terms {
                for (l, c) in generator_product(amb, h, k)?.iter() {
                    out.add_term(l.clone(), a * b * c);
                }
            }
        }
        Ok(out)
    }

    /// Terms as `(symbol, coefficient)`, largest orbit types first.
    pub fn to_symbols(&self, amb: &Ambient) -> Vec<(String, i64)> {
        amb.display_order(self.terms.keys().cloned())
            .into_iter()
            .map(|t| {
                let c = self.terms[&t];
                (amb.symbol(&t), c)
            })
            .collect()
    }

    pub fn from_symbols(amb: &Ambient, terms: &[(String, i64)]) -> Result<Self> {
        let mut out = Self::zero();
        for (s, c) in terms {
            out.add_term(amb.lookup(s)?, *c);
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, amb: &'a Ambient) -> Display<'a> {
        Display { el: self, amb }
    }
}

/// Text rendering such as `(G) - 2(D2^D1 x^V4 V4p)`.
pub struct Display<'a> {
    el: &'a BurnsideElement,
    amb: &'a Ambient,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.el.is_zero() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.el.to_symbols(self.amb).into_iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Serialised leaf form: sorted `(symbol, coefficient)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub symbol: String,
    pub coeff: i64,
}

pub fn to_term_list(el: &BurnsideElement, amb: &Ambient) -> Vec<Term> {
    el.to_symbols(amb)
        .into_iter()
        .map(|(symbol, coeff)| Term { symbol, coeff })
        .collect()
}

/// `(H) * (K) = Σ n_L (L)` by the recurrence over candidates `L`, processed from
/// the top of the partial order down.
pub fn generator_product(amb: &Ambient, h: &OrbitType, k: &OrbitType) -> Result<Arc<[(OrbitType, i64)]>> {
    let whole = amb.whole();
    if *h == whole {
        return Ok(Arc::from(vec![(k.clone(), 1)]));
    }
    if *k == whole {
        return Ok(Arc::from(vec![(h.clone(), 1)]));
    }
    if let Some(v) = amb.cached_product(h, k) {
        return Ok(v);
    }
    let wh = amb.weyl_order(h)? as i64;
    let wk = amb.weyl_order(k)? as i64;
    let mut cands: Vec<OrbitType> = amb.intersection_types(h, k).into_iter().collect();
    cands.sort_by(|a, b| amb.sort_key(b).cmp(&amb.sort_key(a)).then_with(|| a.cmp(b)));
    let mut found: Vec<(OrbitType, i64, i64)> = Vec::new();
    for l in &cands {
        let wl = amb.weyl_order(l)? as i64;
        let mut x = amb.n(l, h)? as i64 * wh * amb.n(l, k)? as i64 * wk;
        for (lt, nl, wlt) in &found {
            x -= nl * amb.n(l, lt)? as i64 * wlt;
        }
        if x % wl != 0 {
            return Err(Error::NonIntegralCoefficient(format!(
                "{} in {} * {}",
                amb.symbol(l),
                amb.symbol(h),
                amb.symbol(k)
            )));
        }
        let nl = x / wl;
        if nl != 0 {
            found.push((l.clone(), nl, wl));
        }
    }
    let terms: Arc<[(OrbitType, i64)]> = found.into_iter().map(|(l, c, _)| (l, c)).collect();
    amb.store_product(h, k, terms.clone());
    Ok(terms)
}

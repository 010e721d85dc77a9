//! Basic degrees `deg_V = G-deg(-id, B(V))` of the irreducibles `W_m ⊗ V_j^-`
//! and their products.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::orbit_types::{orbit_types, Ambient, IrrepModel, OrbitType};

/// Orbit types of one irreducible with their fixed-space dimensions.
pub type TypeList = Arc<[(OrbitType, usize)]>;

#[derive(Default)]
struct Book {
    types: HashMap<(u32, usize), TypeList>,
    degrees: HashMap<(u32, usize), BurnsideElement>,
    maximal: HashMap<(u32, usize), Arc<[OrbitType]>>,
}

/// Basic degrees of one model, cached by `(m, j)`.
pub struct DegreeBook {
    amb: Arc<Ambient>,
    irreps: Vec<IrrepModel>,
    book: Mutex<Book>,
}

impl DegreeBook {
    pub fn new(amb: Arc<Ambient>, irreps: Vec<IrrepModel>) -> Self {
        Self {
            amb,
            irreps,
            book: Mutex::new(Book::default()),
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.amb
    }

    pub fn irreps(&self) -> &[IrrepModel] {
        &self.irreps
    }

    pub fn irrep(&self, j: usize) -> Result<&IrrepModel> {
        self.irreps
            .iter()
            .find(|r| r.j == j)
            .ok_or_else(|| Error::Schema(format!("irreducible {j} does not occur in V")))
    }

    /// Isotropy types of nonzero vectors of `V_{m,j}`; for `m >= 2` these are
    /// the folds of the `m = 1` types.
    pub fn orbit_types(&self, m: u32, j: usize) -> Result<TypeList> {
        if let Some(v) = self.book.lock().expect("book").types.get(&(m, j)) {
            return Ok(v.clone());
        }
        let v: TypeList = if m >= 2 {
            self.orbit_types(1, j)?
                .iter()
                .map(|(t, d)| (self.amb.fold(t, m), *d))
                .collect()
        } else {
            self.orbit_types_direct(m, j)?
        };
        self.book.lock().expect("book").types.insert((m, j), v.clone());
        Ok(v)
    }

    /// Enumeration in the matrix model at frequency `m` itself.
    pub fn orbit_types_direct(&self, m: u32, j: usize) -> Result<TypeList> {
        Ok(orbit_types(&self.amb, self.irrep(j)?, m)?.into())
    }

    /// `𝔐_{m,j}`: maximal orbit types in `Φ_0` of `V_{m,j}`.
    pub fn maximal_types(&self, m: u32, j: usize) -> Result<Arc<[OrbitType]>> {
        if let Some(v) = self.book.lock().expect("book").maximal.get(&(m, j)) {
            return Ok(v.clone());
        }
        let v: Arc<[OrbitType]> = if m >= 2 {
            self.maximal_types(1, j)?.iter().map(|t| self.amb.fold(t, m)).collect()
        } else {
            let phi0: Vec<OrbitType> = self
                .orbit_types(m, j)?
                .iter()
                .filter(|(t, _)| t.in_phi0())
                .map(|(t, _)| t.clone())
                .collect();
            self.amb.display_order(self.amb.maximal(&phi0)?).into()
        };
        self.book.lock().expect("book").maximal.insert((m, j), v.clone());
        Ok(v)
    }

    /// `deg_{V_{m,j}}`, computed at `m = 1` and folded for `m >= 2`.
    pub fn basic_degree(&self, m: u32, j: usize) -> Result<BurnsideElement> {
        if let Some(v) = self.book.lock().expect("book").degrees.get(&(m, j)) {
            return Ok(v.clone());
        }
        let v = if m >= 2 {
            self.fold_element(&self.basic_degree(1, j)?, m)
        } else {
            self.recurrence(&self.orbit_types(m, j)?)?
        };
        self.book.lock().expect("book").degrees.insert((m, j), v.clone());
        Ok(v)
    }

    /// Recurrence run directly on the frequency-`m` enumeration.
    pub fn basic_degree_direct(&self, m: u32, j: usize) -> Result<BurnsideElement> {
        self.recurrence(&self.orbit_types_direct(m, j)?)
    }

    fn recurrence(&self, types: &[(OrbitType, usize)]) -> Result<BurnsideElement> {
        let amb = &*self.amb;
        let whole = amb.whole();
        let mut phi0: Vec<(OrbitType, usize)> = types
            .iter()
            .filter(|(t, _)| t.in_phi0() && *t != whole)
            .cloned()
            .collect();
        phi0.sort_by(|(a, _), (b, _)| amb.sort_key(b).cmp(&amb.sort_key(a)).then_with(|| a.cmp(b)));
        let mut out = BurnsideElement::unit(amb);
        let mut found: Vec<(OrbitType, i64, i64)> = vec![(whole, 1, 1)];
        for (h, dim) in &phi0 {
            let wh = amb.weyl_order(h)? as i64;
            let mut x: i64 = if dim % 2 == 0 { 1 } else { -1 };
            for (k, nk, wk) in &found {
                x -= nk * amb.n(h, k)? as i64 * wk;
            }
            if x % wh != 0 {
                return Err(Error::NonIntegralCoefficient(amb.symbol(h)));
            }
            let nh = x / wh;
            if nh != 0 {
                out.add_term(h.clone(), nh);
                found.push((h.clone(), nh, wh));
            }
        }
        Ok(out)
    }

    /// Term-wise image under the folding homomorphism `Ψ_s`.
    pub fn fold_element(&self, el: &BurnsideElement, s: u32) -> BurnsideElement {
        BurnsideElement::from_terms(el.terms().map(|(t, c)| (self.amb.fold(t, s), c)))
    }

    /// `∏ deg_{V_{m,j}}` over triples `(n, m, j)`; a triple counts once per
    /// copy of `V_j`, so only odd multiplicities contribute.
    pub fn degree_of_linearization(&self, triples: &[(u32, u32, usize)]) -> Result<BurnsideElement> {
        let mut out = BurnsideElement::unit(&self.amb);
        for &(_, m, j) in triples {
            if self.irrep(j)?.multiplicity % 2 == 0 {
                continue;
            }
            out = out.multiply(&self.basic_degree(m, j)?, &self.amb)?;
        }
        Ok(out)
    }

    /// `x_0 = 2/|W(H)|` for a maximal type.
    pub fn x0(&self, h: &OrbitType) -> Result<i64> {
        let w = self.amb.weyl_order(h)? as i64;
        if 2 % w != 0 {
            return Err(Error::NonIntegralCoefficient(format!(
                "x0 for {} with |W| = {w}",
                self.amb.symbol(h)
            )));
        }
        Ok(2 / w)
    }

    /// `dim V_{1,j}^H`, zero when `V_j` does not occur.
    pub fn fixed_dim(&self, h: &OrbitType, m: u32, j: usize) -> Result<usize> {
        match self.irreps.iter().find(|r| r.j == j) {
            Some(r) => self.amb.fixed_dim(h, m, &r.character),
            None => Ok(0),
        }
    }

    /// Whether `coeff^{(^mH)}(deg_{V_{m,j}}) != 0` by the parity rule: `H` is
    /// maximal for `V_{1,j}` and `dim V_{1,j}^H` is odd.
    pub fn hits(&self, h: &OrbitType, j: usize) -> Result<bool> {
        if self.irrep(j).is_err() || !self.maximal_types(1, j)?.contains(h) {
            return Ok(false);
        }
        Ok(self.fixed_dim(h, 1, j)? % 2 == 1)
    }

    /// Closed-form coefficient of `(^sH)` in `∏ deg_{V_{m,j}}` over `factors`.
    ///
    /// Factors at frequency `s` contribute `-x_0` when an odd number of them
    /// hit `H`; every other frequency `m` with an odd hit count and
    /// `(^sH) <= (^mH)` flips the sign. The result is checked against the
    /// Burnside product.
    pub fn coeff_fast(&self, h: &OrbitType, s: u32, factors: &[(u32, usize)]) -> Result<i64> {
        let fast = self.coeff_closed_form(h, s, factors)?;
        let mut product = BurnsideElement::unit(&self.amb);
        for &(m, j) in factors {
            product = product.multiply(&self.basic_degree(m, j)?, &self.amb)?;
        }
        let brute = product.coeff(&self.amb.fold(h, s));
        if fast != brute {
            return Err(Error::CrossCheckMismatch {
                what: format!("coeff of {} at folding {s}", self.amb.symbol(h)),
                fast,
                product: brute,
            });
        }
        Ok(fast)
    }

    pub fn coeff_closed_form(&self, h: &OrbitType, s: u32, factors: &[(u32, usize)]) -> Result<i64> {
        let mut hits: HashMap<u32, usize> = HashMap::new();
        for &(m, j) in factors {
            if m > 0 && self.hits(h, j)? {
                *hits.entry(m).or_default() += 1;
            }
        }
        if hits.get(&s).copied().unwrap_or(0) % 2 == 0 {
            return Ok(0);
        }
        let mut c = -self.x0(h)?;
        let hs = self.amb.fold(h, s);
        for (&m, &count) in &hits {
            if m != s && count % 2 == 1 && m % s == 0 && self.amb.leq(&hs, &self.amb.fold(h, m))? {
                c = -c;
            }
        }
        Ok(c)
    }
}

//! Local bifurcation invariants, folding statistics, branch certificates and
//! global verdicts.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::burnside::BurnsideElement;
use crate::degrees::DegreeBook;
use crate::error::{Error, Result};
use crate::orbit_types::OrbitType;
use crate::spectrum::{CriticalPoint, Spectrum, Triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Products over the whole index set.
    Full,
    /// Products with the background factors (present for every α) divided out.
    Relative,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Mode::Full),
            "relative" => Ok(Mode::Relative),
            _ => Err(Error::Schema(format!("unknown mode {s:?}"))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Full => "full",
            Mode::Relative => "relative",
        })
    }
}

/// `ω(α_0) = ρ(α_0^-) - ρ(α_0^+)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalInvariant {
    pub id: Triple,
    pub alpha: f64,
    pub mode: Mode,
    pub k_fixed: bool,
    pub alpha_minus: f64,
    pub alpha_plus: f64,
    pub value: BurnsideElement,
}

/// Folding statistics of one maximal type at one critical point. Maps are
/// keyed by the folding `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingProfile {
    pub orbit_type: OrbitType,
    pub id: Triple,
    pub n_minus: BTreeMap<u32, usize>,
    pub n_plus: BTreeMap<u32, usize>,
    pub m_minus: BTreeMap<u32, usize>,
    pub m_plus: BTreeMap<u32, usize>,
    pub i: BTreeMap<u32, i8>,
    /// Largest `s` with `𝔦^s != 0`.
    pub s: Option<u32>,
    pub x0: i64,
}

impl FoldingProfile {
    pub fn indicator(&self, s: u32) -> i8 {
        self.i.get(&s).copied().unwrap_or(0)
    }
}

/// One certified branch.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchCertificate {
    pub id: Triple,
    pub alpha: f64,
    pub orbit_type: OrbitType,
    pub folding: u32,
    pub symmetry: OrbitType,
    pub coefficient: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    UnboundedBranch,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlobalVerdict {
    pub orbit_type: OrbitType,
    pub s_bar: Option<u32>,
    pub j_set: Vec<CriticalPoint>,
    pub odd: bool,
    pub conclusion: Conclusion,
    pub symmetry: Option<OrbitType>,
}

/// Direction alternative attached to an unbounded branch.
pub const DIRECTION_ALTERNATIVE: &str = "there is M > 0 such that the branch meets {alpha} x H \
for every regular alpha > M, or for every regular alpha < -M";

/// A model's degrees and spectrum together with the analysis options.
pub struct Problem<'a> {
    pub book: &'a DegreeBook,
    pub spectrum: &'a Spectrum,
    pub k_fixed: bool,
    pub alpha_bracket: f64,
    critical: Vec<CriticalPoint>,
    order: HashMap<Triple, (bool, f64)>,
    prefixes: Mutex<HashMap<Vec<Triple>, BurnsideElement>>,
}

impl<'a> Problem<'a> {
    pub fn new(book: &'a DegreeBook, spectrum: &'a Spectrum, k_fixed: bool, alpha_bracket: f64) -> Result<Self> {
        let critical = spectrum.critical_points()?;
        let mut order = HashMap::new();
        for c in spectrum.curves() {
            let (lo, _) = c.codomain();
            for (m, n, s) in spectrum.table().iter() {
                let t = Triple::new(n as u32, m, c.j);
                order.insert(t, (s >= lo, f64::INFINITY));
            }
        }
        for cp in &critical {
            if let Some(e) = order.get_mut(&cp.id) {
                e.1 = cp.alpha;
            }
        }
        Ok(Self {
            book,
            spectrum,
            k_fixed,
            alpha_bracket,
            critical,
            order,
            prefixes: Mutex::new(HashMap::new()),
        })
    }

    pub fn critical_points(&self) -> &[CriticalPoint] {
        &self.critical
    }

    /// Critical points seen by the analysis: only odd `m` when `K`-fixed.
    pub fn active_critical_points(&self) -> Vec<CriticalPoint> {
        self.critical
            .iter()
            .filter(|c| self.spectrum.multiplicity(c.id.j) % 2 == 1)
            .filter(|c| !self.k_fixed || c.id.m % 2 == 1)
            .cloned()
            .collect()
    }

    pub fn critical_point(&self, id: Triple) -> Result<&CriticalPoint> {
        self.critical
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::Schema(format!("{id} is not a critical point")))
    }

    /// The index set the products run over: `Σ(α)`, or `Σ^K(α)`.
    pub fn sigma(&self, alpha: f64) -> Result<Vec<Triple>> {
        let sets = self.spectrum.index_sets(alpha)?;
        Ok(if self.k_fixed { sets.sigma_k } else { sets.sigma })
    }

    /// Triples in the index set for every α.
    pub fn background(&self) -> Vec<Triple> {
        let mut v: Vec<Triple> = self
            .order
            .iter()
            .filter(|(t, (bg, _))| !bg && self.spectrum.multiplicity(t.j) % 2 == 1)
            .filter(|(t, _)| !self.k_fixed || t.m % 2 == 1)
            .map(|(t, _)| *t)
            .collect();
        v.sort();
        v
    }

    fn sort_triples(&self, v: &mut [Triple]) {
        v.sort_by(|a, b| {
            let ka = self.order.get(a).copied().unwrap_or((true, f64::INFINITY));
            let kb = self.order.get(b).copied().unwrap_or((true, f64::INFINITY));
            ka.0.cmp(&kb.0).then(ka.1.total_cmp(&kb.1)).then(a.cmp(b))
        });
    }

    /// `∏ deg_{V_{m,j}}` over `triples`, with every prefix in a fixed order cached.
    pub fn rho(&self, triples: &[Triple]) -> Result<BurnsideElement> {
        let mut v = triples.to_vec();
        self.sort_triples(&mut v);
        self.prefix_product(&v)
    }

    fn prefix_product(&self, v: &[Triple]) -> Result<BurnsideElement> {
        if v.is_empty() {
            return Ok(BurnsideElement::unit(self.book.ambient()));
        }
        if let Some(x) = self.prefixes.lock().expect("prefix cache").get(v) {
            return Ok(x.clone());
        }
        let head = self.prefix_product(&v[..v.len() - 1])?;
        let last = v[v.len() - 1];
        let out = head.multiply(
            &self.book.degree_of_linearization(&[(last.n, last.m, last.j)])?,
            self.book.ambient(),
        )?;
        self.prefixes.lock().expect("prefix cache").insert(v.to_vec(), out.clone());
        Ok(out)
    }

    /// Bracket `α_0 ∓ min(alpha_bracket, half-gap to the neighbours)`.
    pub fn bracket(&self, cp: &CriticalPoint) -> Result<(f64, f64)> {
        let gap = self
            .critical
            .iter()
            .filter(|c| c.id != cp.id)
            .map(|c| (c.alpha - cp.alpha).abs())
            .fold(f64::INFINITY, f64::min);
        if gap < 1e-9 {
            return Err(Error::NotIsolated(cp.id.to_string()));
        }
        let w = self.alpha_bracket.min(gap / 2.0);
        Ok((cp.alpha - w, cp.alpha + w))
    }

    fn sides(&self, cp: &CriticalPoint, mode: Mode) -> Result<(Vec<Triple>, Vec<Triple>)> {
        let (lo, hi) = self.bracket(cp)?;
        let mut minus = self.sigma(lo)?;
        let mut plus = self.sigma(hi)?;
        if mode == Mode::Relative {
            let bg: BTreeSet<Triple> = self.background().into_iter().collect();
            minus.retain(|t| !bg.contains(t));
            plus.retain(|t| !bg.contains(t));
        }
        Ok((minus, plus))
    }

    pub fn local_invariant(&self, cp: &CriticalPoint, mode: Mode) -> Result<LocalInvariant> {
        let (lo, hi) = self.bracket(cp)?;
        let (minus, plus) = self.sides(cp, mode)?;
        let value = self.rho(&minus)?.sub(&self.rho(&plus)?);
        Ok(LocalInvariant {
            id: cp.id,
            alpha: cp.alpha,
            mode,
            k_fixed: self.k_fixed,
            alpha_minus: lo,
            alpha_plus: hi,
            value,
        })
    }

    /// `∏` of the background factors.
    pub fn background_product(&self) -> Result<BurnsideElement> {
        self.rho(&self.background())
    }

    /// `𝔐_1 = ⋃_j 𝔐_{1,j}` over the irreducibles that occur, in display order.
    pub fn maximal_types(&self) -> Result<Vec<OrbitType>> {
        let mut all = BTreeSet::new();
        for r in self.book.irreps() {
            all.extend(self.book.maximal_types(1, r.j)?.iter().cloned());
        }
        Ok(self.book.ambient().display_order(all))
    }

    fn hits_at(&self, h: &OrbitType, s: u32, t: &Triple) -> Result<bool> {
        if t.m == 0 {
            return Ok(false);
        }
        let folded = self.book.ambient().fold(h, s);
        Ok(self.book.basic_degree(t.m, t.j)?.coeff(&folded) != 0)
    }

    fn counts(&self, h: &OrbitType, sigma: &[Triple], levels: &BTreeSet<u32>) -> Result<BTreeMap<u32, usize>> {
        let mut out = BTreeMap::new();
        for &s in levels {
            let mut c = 0;
            for t in sigma {
                if self.hits_at(h, s, t)? {
                    c += 1;
                }
            }
            out.insert(s, c);
        }
        Ok(out)
    }

    /// `𝔪^s`: triples of `Σ^m` over the levels `m` with `(^sH) < (^mH)` and
    /// odd `𝔫^m`.
    fn m_counts(&self, h: &OrbitType, n: &BTreeMap<u32, usize>) -> Result<BTreeMap<u32, usize>> {
        let amb = self.book.ambient();
        let mut out = BTreeMap::new();
        for &s in n.keys() {
            let hs = amb.fold(h, s);
            let mut c = 0;
            for (&m, &nm) in n {
                if m != s && m % s == 0 && nm % 2 == 1 && amb.leq(&hs, &amb.fold(h, m))? {
                    c += nm;
                }
            }
            out.insert(s, c);
        }
        Ok(out)
    }

    pub fn folding_profile(&self, cp: &CriticalPoint, h: &OrbitType) -> Result<FoldingProfile> {
        let (minus, plus) = self.sides(cp, Mode::Full)?;
        let levels: BTreeSet<u32> = minus.iter().chain(&plus).map(|t| t.m).filter(|&m| m > 0).collect();
        let n_minus = self.counts(h, &minus, &levels)?;
        let n_plus = self.counts(h, &plus, &levels)?;
        let m_minus = self.m_counts(h, &n_minus)?;
        let m_plus = self.m_counts(h, &n_plus)?;
        let mut i = BTreeMap::new();
        for &s in &levels {
            let (a, b) = (n_minus[&s] % 2, n_plus[&s] % 2);
            let v = match (a, b) {
                (1, 0) => -1,
                (0, 1) => 1,
                _ => 0,
            };
            i.insert(s, v);
        }
        let s = i.iter().filter(|(_, &v)| v != 0).map(|(&s, _)| s).max();
        Ok(FoldingProfile {
            orbit_type: h.clone(),
            id: cp.id,
            n_minus,
            n_plus,
            m_minus,
            m_plus,
            i,
            s,
            x0: self.book.x0(h)?,
        })
    }

    /// Closed-form coefficient of `(^sH)` in `ω(α_0)`: `(-1)^{𝔪^𝔰(α_0^-)} 𝔦^𝔰 x_0`
    /// at `s = 𝔰` and zero above. Checked against the full-mode invariant.
    pub fn closed_form_coeff(&self, cp: &CriticalPoint, h: &OrbitType, s: u32) -> Result<i64> {
        let p = self.folding_profile(cp, h)?;
        let top = p
            .s
            .ok_or_else(|| Error::Schema(format!("no folding changes parity at {}", cp.id)))?;
        let fast = if s == top {
            let sign = if p.m_minus.get(&top).copied().unwrap_or(0) % 2 == 0 { 1 } else { -1 };
            sign * p.indicator(top) as i64 * p.x0
        } else if s > top {
            0
        } else {
            return Err(Error::Schema(format!("folding {s} lies below the maximal folding {top}")));
        };
        let omega = self.local_invariant(cp, Mode::Full)?;
        let brute = omega.value.coeff(&self.book.ambient().fold(h, s));
        if fast != brute {
            return Err(Error::CrossCheckMismatch {
                what: format!(
                    "coefficient of {} at {} folded by {s}",
                    self.book.ambient().symbol(h),
                    cp.id
                ),
                fast,
                product: brute,
            });
        }
        Ok(fast)
    }

    /// `Σ^s(α_0^±, H)` on both sides.
    pub fn sigma_s(&self, cp: &CriticalPoint, h: &OrbitType, s: u32) -> Result<(Vec<Triple>, Vec<Triple>)> {
        let (minus, plus) = self.sides(cp, Mode::Full)?;
        let mut out = (Vec::new(), Vec::new());
        for t in &minus {
            if self.hits_at(h, s, t)? {
                out.0.push(*t);
            }
        }
        for t in &plus {
            if self.hits_at(h, s, t)? {
                out.1.push(*t);
            }
        }
        Ok(out)
    }

    /// Closed-form coefficients of `(^sH)` in `∏_{Σ^s(α_0^±,H)} deg` checked
    /// against the Burnside product. `None` when `H` is not maximal for every
    /// factor, where the closed form makes no claim.
    pub fn factor_coeffs(&self, cp: &CriticalPoint, h: &OrbitType, s: u32) -> Result<Option<(i64, i64)>> {
        let (minus, plus) = self.sigma_s(cp, h, s)?;
        for t in minus.iter().chain(&plus) {
            if !self.book.maximal_types(1, t.j)?.contains(h) {
                return Ok(None);
            }
        }
        let hs = self.book.ambient().fold(h, s);
        let mut out = [0i64; 2];
        for (k, side) in [minus, plus].iter().enumerate() {
            let factors: Vec<(u32, usize)> = side.iter().map(|t| (t.m, t.j)).collect();
            let fast = self.book.coeff_closed_form(h, s, &factors)?;
            let brute = self.rho(side)?.coeff(&hs);
            if fast != brute {
                return Err(Error::CrossCheckMismatch {
                    what: format!(
                        "coefficient of {} over the {} factors at {}",
                        self.book.ambient().symbol(&hs),
                        if k == 0 { "left" } else { "right" },
                        cp.id
                    ),
                    fast,
                    product: brute,
                });
            }
            out[k] = fast;
        }
        Ok(Some((out[0], out[1])))
    }

    /// Certificates for every maximal type whose `(^𝔰H)` coefficient in the
    /// full invariant is nonzero.
    pub fn branch_certificates(&self, cp: &CriticalPoint) -> Result<Vec<BranchCertificate>> {
        let omega = self.local_invariant(cp, Mode::Full)?;
        let mut out = Vec::new();
        for h in self.maximal_types()? {
            let p = self.folding_profile(cp, &h)?;
            let Some(s) = p.s else { continue };
            let sym = self.book.ambient().fold(&h, s);
            let c = omega.value.coeff(&sym);
            if c != 0 {
                out.push(BranchCertificate {
                    id: cp.id,
                    alpha: cp.alpha,
                    orbit_type: h,
                    folding: s,
                    symmetry: sym,
                    coefficient: c,
                });
            }
        }
        Ok(out)
    }

    /// `s̄(H)`, `𝔍(H)` and the parity conclusion.
    pub fn global_verdict(&self, h: &OrbitType) -> Result<GlobalVerdict> {
        let mut levels = Vec::new();
        for cp in self.active_critical_points() {
            if let Some(s) = self.folding_profile(&cp, h)?.s {
                levels.push((cp, s));
            }
        }
        let s_bar = levels.iter().map(|(_, s)| *s).max();
        let j_set: Vec<CriticalPoint> = levels
            .into_iter()
            .filter(|(_, s)| Some(*s) == s_bar)
            .map(|(c, _)| c)
            .collect();
        let odd = j_set.len() % 2 == 1;
        Ok(GlobalVerdict {
            orbit_type: h.clone(),
            s_bar,
            odd,
            conclusion: if odd { Conclusion::UnboundedBranch } else { Conclusion::Inconclusive },
            symmetry: if odd { s_bar.map(|s| self.book.ambient().fold(h, s)) } else { None },
            j_set,
        })
    }
}

/// Term-wise sum of invariants.
pub fn rabinowitz_sum(invariants: &[LocalInvariant]) -> BurnsideElement {
    invariants
        .iter()
        .fold(BurnsideElement::zero(), |acc, w| acc.add(&w.value))
}

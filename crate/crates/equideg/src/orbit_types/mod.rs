//! Conjugacy classes of closed subgroups of `O(2) x Γ'` in amalgamated form.
//!
//! A finite subgroup whose O(2)-projection `K1` is `D_k` or `Z_k` is stored at
//! level `k`: every element is a triple `(a mod k, f, γ)` standing for
//! `(R_{2πa/k} κ^f, γ)`, with a reflection on the zero axis when `K1 = D_k`.
//! The stored element list is the lexicographic minimum over conjugation by
//! `N(D_k) x Γ' = D_{2k} x Γ'`, so equal keys mean conjugate subgroups.
//!
//! Queries that compare two subgroups run in the truncation `D_N x Γ'` with
//! `N = 4 lcm(k, k')` and are repeated at `2N`; differing answers abort.

mod enumerate;

pub use enumerate::{irrep_models, orbit_types, IrrepModel};

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::finite_group::{
    class_index, subgroup_classes, CharacterTable, FiniteGroup, Permutation, Subgroup,
    SubgroupClass,
};

/// Kind of the O(2)-projection `K1` or kernel `Z1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum O2Part {
    Z(u32),
    D(u32),
    SO2,
    O2,
}

impl fmt::Display for O2Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            O2Part::Z(k) => write!(f, "Z{k}"),
            O2Part::D(k) => write!(f, "D{k}"),
            O2Part::SO2 => write!(f, "SO2"),
            O2Part::O2 => write!(f, "O2"),
        }
    }
}

/// Canonical finite subgroup of `O(2) x Γ'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteType {
    level: u32,
    dihedral: bool,
    elems: Arc<[u32]>,
}

impl FiniteType {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_dihedral(&self) -> bool {
        self.dihedral
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn codes(&self) -> &[u32] {
        &self.elems
    }
}

/// An orbit type: a finite amalgam, or `O(2) x K` for a class `K` of Γ'.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitType {
    Product(usize),
    Finite(FiniteType),
}

impl OrbitType {
    pub fn is_finite(&self) -> bool {
        matches!(self, OrbitType::Finite(_))
    }

    /// Finite Weyl group: `O(2) x K`, or a finite type with dihedral `K1`.
    pub fn in_phi0(&self) -> bool {
        match self {
            OrbitType::Product(_) => true,
            OrbitType::Finite(t) => t.dihedral,
        }
    }
}

/// Decoded element `(a mod level, f, γ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Elem {
    pub a: u32,
    pub f: u32,
    pub g: u32,
}

#[derive(Default)]
struct Caches {
    canonical: HashMap<(u32, Vec<u32>), FiniteType>,
    weyl: HashMap<OrbitType, u64>,
    n: HashMap<(OrbitType, OrbitType), u64>,
    symbols: HashMap<String, BTreeSet<OrbitType>>,
    folds: HashMap<(OrbitType, u32), OrbitType>,
    products: HashMap<(OrbitType, OrbitType), Arc<[(OrbitType, i64)]>>,
}

/// The ambient group `O(2) x Γ'` together with its Γ'-subgroup lattice, names
/// and memo tables.
pub struct Ambient {
    gamma: FiniteGroup,
    base_degree: usize,
    antipode: Option<usize>,
    classes: Vec<SubgroupClass>,
    class_names: Vec<String>,
    class_keys: HashMap<Subgroup, usize>,
    conj_table: Vec<u32>,
    gamma_table: Option<CharacterTable>,
    caches: Mutex<Caches>,
}

/// A named Γ'-subgroup given by generators in cycle notation on the full
/// permutation domain of Γ'.
#[derive(Clone, Debug)]
pub struct SubgroupName {
    pub name: String,
    pub generators: Vec<String>,
}

impl Ambient {
    /// `gamma` acts on `base_degree` points; with `antipodal` the group is
    /// extended by a central `Z2` acting on two extra points.
    pub fn new(
        gamma: &FiniteGroup,
        antipodal: bool,
        names: &[SubgroupName],
        gamma_table: Option<CharacterTable>,
    ) -> Result<Self> {
        let base_degree = gamma.degree();
        let (full, antipode) = if antipodal {
            let z2 = crate::finite_group::group_from_generators(
                2,
                &[Permutation::from_cycles("(1,2)", 2)?],
            )?;
            let full = crate::finite_group::direct_product(gamma, &z2)?;
            let mut img: Vec<usize> = (0..base_degree + 2).collect();
            img.swap(base_degree, base_degree + 1);
            let idx = full.index_of(&Permutation::new(img)?);
            (full, idx)
        } else {
            (gamma.clone(), None)
        };
        let classes = subgroup_classes(&full)?;
        let mut class_names: Vec<Option<String>> = vec![None; classes.len()];
        let mut used: HashMap<String, usize> = HashMap::new();
        for entry in names {
            let gens = entry
                .generators
                .iter()
                .map(|s| {
                    let p = Permutation::from_cycles(s, full.degree())?;
                    full.index_of(&p).ok_or_else(|| {
                        Error::Schema(format!("generator {s} of {} is not in the group", entry.name))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let h = full.generate(&gens);
            let ci = class_index(&full, &classes, &h).expect("every subgroup has a class");
            if class_names[ci].is_some() {
                return Err(Error::Schema(format!(
                    "subgroup name {} repeats an already named class",
                    entry.name
                )));
            }
            let count = used.entry(entry.name.clone()).or_insert(0);
            *count += 1;
            class_names[ci] = Some(if *count == 1 {
                entry.name.clone()
            } else {
                format!("{}#{}", entry.name, count)
            });
        }
        let class_names: Vec<String> = class_names
            .into_iter()
            .enumerate()
            .map(|(i, n)| n.unwrap_or_else(|| format!("C{}_{}", classes[i].representative.order(), i)))
            .collect();
        let class_keys = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.representative.clone(), i))
            .collect();
        let ng = full.order();
        let mut conj_table = vec![0u32; ng * ng];
        for g in 0..ng {
            for x in 0..ng {
                conj_table[g * ng + x] = full.conj(g, x) as u32;
            }
        }
        let classes = classes
            .into_iter()
            .zip(&class_names)
            .map(|(mut c, n)| {
                c.name = Some(n.clone());
                c
            })
            .collect();
        Ok(Self {
            gamma: full,
            base_degree,
            antipode,
            classes,
            class_names,
            class_keys,
            conj_table,
            gamma_table,
            caches: Mutex::new(Caches::default()),
        })
    }

    /// The finite factor Γ' (including the antipodal Z2 when present).
    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn base_degree(&self) -> usize {
        self.base_degree
    }

    pub fn antipode(&self) -> Option<usize> {
        self.antipode
    }

    pub fn gamma_table(&self) -> Option<&CharacterTable> {
        self.gamma_table.as_ref()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_name(&self, i: usize) -> &str {
        &self.class_names[i]
    }

    pub fn class_by_name(&self, name: &str) -> Option<usize> {
        self.class_names.iter().position(|n| n == name)
    }

    pub fn class_of(&self, h: &Subgroup) -> usize {
        let key = self.gamma.canonical_conjugate(h);
        self.class_keys[&key]
    }

    fn ng(&self) -> u32 {
        self.gamma.order() as u32
    }

    fn gconj(&self, g: u32, x: u32) -> u32 {
        self.conj_table[(g * self.ng() + x) as usize]
    }

    pub fn encode(&self, e: Elem) -> u32 {
        (e.a * 2 + e.f) * self.ng() + e.g
    }

    pub fn decode(&self, code: u32) -> Elem {
        let ng = self.ng();
        let g = code % ng;
        let af = code / ng;
        Elem {
            a: af / 2,
            f: af % 2,
            g,
        }
    }

    /// The unit `(G) = O(2) x Γ'`.
    pub fn whole(&self) -> OrbitType {
        OrbitType::Product(self.classes.len() - 1)
    }

    pub fn product_type(&self, k: &Subgroup) -> OrbitType {
        OrbitType::Product(self.class_of(k))
    }

    /// Elements of the canonical representative, decoded at the type's level.
    pub fn elements_of(&self, t: &OrbitType) -> Result<Vec<Elem>> {
        match t {
            OrbitType::Finite(ft) => Ok(ft.elems.iter().map(|&c| self.decode(c)).collect()),
            OrbitType::Product(_) => Err(Error::InfiniteSubgroup(self.symbol(t))),
        }
    }

    /// Canonical type of a finite subgroup given by codes at level `n`.
    pub fn canonicalize(&self, n: u32, codes: &[u32]) -> FiniteType {
        let els: Vec<Elem> = codes.iter().map(|&c| self.decode(c)).collect();
        let rot: BTreeSet<u32> = els.iter().filter(|e| e.f == 0).map(|e| e.a).collect();
        let k = rot.len() as u32;
        let step = n / k;
        debug_assert!(rot.iter().all(|a| a % step == 0));
        let shift = els.iter().find(|e| e.f == 1).map(|e| e.a);
        let dihedral = shift.is_some();
        let shift = shift.unwrap_or(0);
        let mut std: Vec<u32> = els
            .iter()
            .map(|e| {
                let a = if e.f == 1 { (e.a + n - shift) % n } else { e.a };
                debug_assert_eq!(a % step, 0);
                self.encode(Elem { a: a / step, f: e.f, g: e.g })
            })
            .collect();
        std.sort_unstable();
        let key = (k, std);
        if let Some(t) = self.caches.lock().expect("cache").canonical.get(&key) {
            return t.clone();
        }
        let best = self.min_conjugate(k, &key.1, dihedral);
        let t = FiniteType {
            level: k,
            dihedral,
            elems: best.into(),
        };
        self.caches.lock().expect("cache").canonical.insert(key, t.clone());
        t
    }

    fn min_conjugate(&self, k: u32, codes: &[u32], dihedral: bool) -> Vec<u32> {
        let els: Vec<Elem> = codes.iter().map(|&c| self.decode(c)).collect();
        let mut best: Option<Vec<u32>> = None;
        let mut buf = Vec::with_capacity(els.len());
        let shifts = if dihedral { k } else { 1 };
        for eps in [1u32, k - 1] {
            for t in 0..shifts {
                for g in 0..self.ng() {
                    buf.clear();
                    buf.extend(els.iter().map(|e| {
                        self.encode(Elem {
                            a: (e.a * eps + t * e.f) % k,
                            f: e.f,
                            g: self.gconj(g, e.g),
                        })
                    }));
                    buf.sort_unstable();
                    if best.as_ref().map_or(true, |b| buf < *b) {
                        best = Some(buf.clone());
                    }
                }
            }
            if k <= 2 {
                break;
            }
        }
        best.expect("nonempty search")
    }

    /// Codes of `t` embedded at level `m` (a multiple of its level).
    fn embed(&self, t: &FiniteType, m: u32) -> Vec<u32> {
        let s = m / t.level;
        t.elems
            .iter()
            .map(|&c| {
                let e = self.decode(c);
                self.encode(Elem { a: e.a * s, ..e })
            })
            .collect()
    }

    fn bitset(&self, codes: &[u32], m: u32) -> Vec<u64> {
        let mut bits = vec![0u64; ((2 * m * self.ng()) as usize).div_ceil(64)];
        for &c in codes {
            bits[(c / 64) as usize] |= 1 << (c % 64);
        }
        bits
    }

    fn has(bits: &[u64], c: u32) -> bool {
        bits[(c / 64) as usize] >> (c % 64) & 1 == 1
    }

    /// Number of conjugation parameters `(ε, t, g)` at level `m` that carry
    /// `l` into `h`. Each parameter stands for two elements of `D_{2m} x Γ'`.
    fn count_into(&self, l: &[Elem], hbits: &[u64], m: u32) -> u64 {
        let rots: Vec<&Elem> = l.iter().filter(|e| e.f == 0).collect();
        let refl: Vec<&Elem> = l.iter().filter(|e| e.f == 1).collect();
        let mut count = 0u64;
        for eps in [1u32, m - 1] {
            if m <= 2 && eps != 1 {
                // a -> -a is the identity map mod 1 and 2; count it once more.
                count *= 2;
                break;
            }
            for g in 0..self.ng() {
                let ok = rots.iter().all(|e| {
                    Self::has(
                        hbits,
                        self.encode(Elem { a: e.a * eps % m, f: 0, g: self.gconj(g, e.g) }),
                    )
                });
                if !ok {
                    continue;
                }
                let Some(first) = refl.first() else {
                    count += m as u64;
                    continue;
                };
                let g0 = self.gconj(g, first.g);
                let base = first.a * eps % m;
                for b in 0..m {
                    if !Self::has(hbits, self.encode(Elem { a: b, f: 1, g: g0 })) {
                        continue;
                    }
                    let t = (b + m - base) % m;
                    let fits = refl.iter().all(|e| {
                        Self::has(
                            hbits,
                            self.encode(Elem {
                                a: (e.a * eps + t) % m,
                                f: 1,
                                g: self.gconj(g, e.g),
                            }),
                        )
                    });
                    if fits {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    fn decoded(&self, codes: &[u32]) -> Vec<Elem> {
        codes.iter().map(|&c| self.decode(c)).collect()
    }

    fn finite_weyl_at(&self, t: &FiniteType, m: u32) -> u64 {
        let codes = self.embed(t, m);
        let bits = self.bitset(&codes, m);
        2 * self.count_into(&self.decoded(&codes), &bits, m) / t.order() as u64
    }

    /// `|W(H)| = |N(H)|/|H|`, computed in `D_{4k} x Γ'` and checked in `D_{8k} x Γ'`.
    pub fn weyl_order(&self, t: &OrbitType) -> Result<u64> {
        if let Some(&w) = self.caches.lock().expect("cache").weyl.get(t) {
            return Ok(w);
        }
        let w = match t {
            OrbitType::Product(ci) => {
                let h = &self.classes[*ci].representative;
                (self.gamma.normalizer(h).order() / h.order()) as u64
            }
            OrbitType::Finite(ft) => {
                if !ft.dihedral {
                    return Err(Error::InfiniteWeyl(self.symbol(t)));
                }
                let m = 2 * ft.level;
                let w1 = self.finite_weyl_at(ft, m);
                let w2 = self.finite_weyl_at(ft, 2 * m);
                if w1 != w2 {
                    return Err(Error::StabilizationFailure {
                        what: format!("W{}", self.symbol(t)),
                        at_n: w1 as i64,
                        at_2n: w2 as i64,
                    });
                }
                w1
            }
        };
        self.caches.lock().expect("cache").weyl.insert(t.clone(), w);
        Ok(w)
    }

    fn gamma_projection(&self, t: &FiniteType) -> Subgroup {
        let gens: BTreeSet<usize> = t.elems.iter().map(|&c| self.decode(c).g as usize).collect();
        self.gamma
            .subgroup(&gens.into_iter().collect::<Vec<_>>())
            .expect("projection of a subgroup is a subgroup")
    }

    fn gamma_n(&self, h: &Subgroup, k: usize) -> u64 {
        let rep = &self.classes[k].representative;
        if rep.order() % h.order() != 0 {
            return 0;
        }
        self.gamma
            .conjugates(rep)
            .iter()
            .filter(|c| h.is_subset_of(c))
            .count() as u64
    }

    fn finite_n_at(&self, l: &FiniteType, h: &FiniteType, m: u32) -> u64 {
        let hc = self.embed(h, m);
        let hb = self.bitset(&hc, m);
        let lc = self.embed(l, m);
        let into = self.count_into(&self.decoded(&lc), &hb, m);
        if into == 0 {
            return 0;
        }
        let norm = self.count_into(&self.decoded(&hc), &hb, m);
        debug_assert_eq!(into % norm, 0);
        into / norm
    }

    /// `n(L, H)`: number of conjugates of `H` containing a fixed copy of `L`.
    pub fn n(&self, l: &OrbitType, h: &OrbitType) -> Result<u64> {
        if l == h {
            return Ok(1);
        }
        let key = (l.clone(), h.clone());
        if let Some(&v) = self.caches.lock().expect("cache").n.get(&key) {
            return Ok(v);
        }
        let v = match (l, h) {
            (OrbitType::Product(a), OrbitType::Product(b)) => {
                self.gamma_n(&self.classes[*a].representative, *b)
            }
            (OrbitType::Product(_), OrbitType::Finite(_)) => 0,
            (OrbitType::Finite(lt), OrbitType::Product(b)) => self.gamma_n(&self.gamma_projection(lt), *b),
            (OrbitType::Finite(lt), OrbitType::Finite(ht)) => {
                let divides = ht.level % lt.level == 0
                    && ht.order() % lt.order() == 0
                    && (ht.dihedral || !lt.dihedral);
                if !divides {
                    0
                } else {
                    let m = 2 * ht.level;
                    let v1 = self.finite_n_at(lt, ht, m);
                    let v2 = self.finite_n_at(lt, ht, 2 * m);
                    if v1 != v2 {
                        return Err(Error::StabilizationFailure {
                            what: format!("n({}, {})", self.symbol(l), self.symbol(h)),
                            at_n: v1 as i64,
                            at_2n: v2 as i64,
                        });
                    }
                    v1
                }
            }
        };
        self.caches.lock().expect("cache").n.insert(key, v);
        Ok(v)
    }

    /// `(L) <= (H)` in the subgroup partial order.
    ///
    /// Decided by containment rather than `n`, which is infinite when `L`
    /// has no reflection.
    pub fn leq(&self, l: &OrbitType, h: &OrbitType) -> Result<bool> {
        match (l, h) {
            (OrbitType::Finite(lt), OrbitType::Finite(ht)) if !lt.dihedral => {
                if l == h {
                    return Ok(true);
                }
                let possible = ht.level % lt.level == 0 && ht.order() % lt.order() == 0;
                Ok(possible && self.finite_n_at(lt, ht, 2 * ht.level) > 0)
            }
            _ => Ok(self.n(l, h)? > 0),
        }
    }

    /// Preimage class under the s-fold covering `ψ_s` of O(2).
    pub fn fold(&self, t: &OrbitType, s: u32) -> OrbitType {
        let OrbitType::Finite(ft) = t else {
            return t.clone();
        };
        if s == 1 {
            return t.clone();
        }
        let key = (t.clone(), s);
        if let Some(v) = self.caches.lock().expect("cache").folds.get(&key) {
            return v.clone();
        }
        let k = ft.level;
        let mut codes = Vec::with_capacity(ft.order() * s as usize);
        for &c in ft.elems.iter() {
            let e = self.decode(c);
            for i in 0..s {
                codes.push(self.encode(Elem { a: e.a + i * k, ..e }));
            }
        }
        codes.sort_unstable();
        let out = OrbitType::Finite(self.canonicalize(k * s, &codes));
        self.caches.lock().expect("cache").folds.insert(key, out.clone());
        out
    }

    /// All isotropy-candidate intersections `H ∩ gKg^-1` in `Φ_0`.
    pub(crate) fn intersection_types(&self, h: &OrbitType, k: &OrbitType) -> BTreeSet<OrbitType> {
        let mut out = BTreeSet::new();
        match (h, k) {
            (OrbitType::Product(a), OrbitType::Product(b)) => {
                let ha = &self.classes[*a].representative;
                for c in self.gamma.conjugates(&self.classes[*b].representative) {
                    let inter: Vec<usize> =
                        ha.members().iter().copied().filter(|&x| c.contains(x)).collect();
                    let s = self.gamma.subgroup(&inter).expect("intersection");
                    out.insert(OrbitType::Product(self.class_of(&s)));
                }
            }
            (OrbitType::Finite(ft), OrbitType::Product(b)) | (OrbitType::Product(b), OrbitType::Finite(ft)) => {
                for c in self.gamma.conjugates(&self.classes[*b].representative) {
                    let codes: Vec<u32> = ft
                        .elems
                        .iter()
                        .copied()
                        .filter(|&x| c.contains(self.decode(x).g as usize))
                        .collect();
                    let t = self.canonicalize(ft.level, &codes);
                    if t.dihedral {
                        out.insert(OrbitType::Finite(t));
                    }
                }
            }
            (OrbitType::Finite(a), OrbitType::Finite(b)) => {
                let m = 2 * lcm(a.level, b.level);
                let ac = self.embed(a, m);
                let abits = self.bitset(&ac, m);
                let bc = self.decoded(&self.embed(b, m));
                let mut conjugates: HashSet<Vec<u32>> = HashSet::new();
                let eps_list: &[u32] = if m <= 2 { &[1] } else { &[1, m - 1] };
                for &eps in eps_list {
                    for t in 0..m {
                        for g in 0..self.ng() {
                            let mut v: Vec<u32> = bc
                                .iter()
                                .map(|e| {
                                    self.encode(Elem {
                                        a: (e.a * eps + t * e.f) % m,
                                        f: e.f,
                                        g: self.gconj(g, e.g),
                                    })
                                })
                                .filter(|&c| Self::has(&abits, c))
                                .collect();
                            v.sort_unstable();
                            conjugates.insert(v);
                        }
                    }
                }
                for inter in conjugates {
                    if !inter.iter().any(|&c| self.decode(c).f == 1) {
                        continue;
                    }
                    out.insert(OrbitType::Finite(self.canonicalize(m, &inter)));
                }
            }
        }
        out
    }

    /// `(K1, Z1, Z2 class, K2 class)` of a type.
    pub fn components(&self, t: &OrbitType) -> (O2Part, O2Part, usize, usize) {
        match t {
            OrbitType::Product(c) => (O2Part::O2, O2Part::O2, *c, *c),
            OrbitType::Finite(ft) => {
                let els = self.decoded(&ft.elems);
                let k1 = if ft.dihedral {
                    O2Part::D(ft.level)
                } else {
                    O2Part::Z(ft.level)
                };
                let z1: Vec<&Elem> = els.iter().filter(|e| e.g == 0).collect();
                let z1_rot = z1.iter().filter(|e| e.f == 0).count() as u32;
                let z1p = if z1.iter().any(|e| e.f == 1) {
                    O2Part::D(z1_rot)
                } else {
                    O2Part::Z(z1_rot)
                };
                let z2: Vec<usize> = els
                    .iter()
                    .filter(|e| e.a == 0 && e.f == 0)
                    .map(|e| e.g as usize)
                    .collect();
                let z2s = self.gamma.subgroup(&z2).expect("kernel");
                (k1, z1p, self.class_of(&z2s), self.class_of(&self.gamma_projection(ft)))
            }
        }
    }

    fn base_symbol(&self, t: &OrbitType) -> String {
        match t {
            OrbitType::Product(c) if *c == self.classes.len() - 1 => "(G)".to_string(),
            OrbitType::Product(c) => format!("(O2 x {})", self.class_names[*c]),
            OrbitType::Finite(_) => {
                let (k1, z1, z2, k2) = self.components(t);
                format!("({k1}^{z1} x^{} {})", self.class_names[z2], self.class_names[k2])
            }
        }
    }

    /// ASCII amalgamated symbol `(K1^Z1 x^Z2 K2)`. Distinct types that would
    /// render identically receive a `~n` suffix in canonical order.
    pub fn symbol(&self, t: &OrbitType) -> String {
        let base = self.base_symbol(t);
        let mut caches = self.caches.lock().expect("cache");
        let set = caches.symbols.entry(base.clone()).or_default();
        set.insert(t.clone());
        if set.len() == 1 {
            base
        } else {
            let pos = set.iter().position(|x| x == t).expect("inserted");
            format!("{base}~{}", pos + 1)
        }
    }

    /// Unicode rendering, e.g. `(D₆^{Z₃} ×^{V4} D4p)`.
    pub fn pretty(&self, t: &OrbitType) -> String {
        self.symbol(t).replace(" x^", " ×^").replace(" x ", " × ")
    }

    /// Looks a symbol up among the types rendered so far.
    pub fn lookup(&self, symbol: &str) -> Result<OrbitType> {
        let caches = self.caches.lock().expect("cache");
        let (base, idx) = match symbol.rsplit_once('~') {
            Some((b, i)) if i.chars().all(|c| c.is_ascii_digit()) => {
                (b.to_string(), i.parse::<usize>().ok())
            }
            _ => (symbol.to_string(), None),
        };
        let set = caches
            .symbols
            .get(&base)
            .ok_or_else(|| Error::UnknownOrbitType(symbol.to_string()))?;
        match idx {
            None if set.len() == 1 => Ok(set.iter().next().expect("one").clone()),
            Some(i) if i >= 1 && i <= set.len() => Ok(set.iter().nth(i - 1).expect("index").clone()),
            _ => Err(Error::UnknownOrbitType(symbol.to_string())),
        }
    }

    /// Orders types for display: larger groups first, then by symbol.
    pub fn display_order(&self, types: impl IntoIterator<Item = OrbitType>) -> Vec<OrbitType> {
        let mut v: Vec<(OrbitType, String)> =
            types.into_iter().map(|t| (t.clone(), self.symbol(&t))).collect();
        v.sort_by(|(a, sa), (b, sb)| {
            self.sort_key(b).cmp(&self.sort_key(a)).then_with(|| sa.cmp(sb))
        });
        v.into_iter().map(|(t, _)| t).collect()
    }

    /// Key compatible with the partial order: `(L) < (H)` implies `key(L) < key(H)`.
    pub fn sort_key(&self, t: &OrbitType) -> (u8, usize) {
        match t {
            OrbitType::Product(c) => (1, self.classes[*c].representative.order()),
            OrbitType::Finite(ft) => (0, ft.order()),
        }
    }

    /// `dim (W_m ⊗ V)^H` from the Γ'-character `chi` of `V`.
    pub fn fixed_dim(&self, t: &OrbitType, m: u32, chi: &[f64]) -> Result<usize> {
        let s = match t {
            OrbitType::Product(c) => {
                if m > 0 {
                    return Ok(0);
                }
                let h = &self.classes[*c].representative;
                h.members().iter().map(|&x| chi[x]).sum::<f64>() / h.order() as f64
            }
            OrbitType::Finite(ft) => {
                let total: f64 = ft
                    .elems
                    .iter()
                    .map(|&c| {
                        let e = self.decode(c);
                        let w = if m == 0 {
                            1.0
                        } else if e.f == 1 {
                            0.0
                        } else {
                            2.0 * (2.0 * std::f64::consts::PI * (m * e.a) as f64 / ft.level as f64).cos()
                        };
                        w * chi[e.g as usize]
                    })
                    .sum();
                total / ft.order() as f64
            }
        };
        let r = s.round();
        if (s - r).abs() > 1e-8 || r < 0.0 {
            return Err(Error::NonIntegralTrace(s));
        }
        Ok(r as usize)
    }

    /// Maximal elements of a list under `leq`.
    pub fn maximal(&self, types: &[OrbitType]) -> Result<Vec<OrbitType>> {
        let mut out = Vec::new();
        for t in types {
            let mut dominated = false;
            for u in types {
                if u != t && self.leq(t, u)? {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                out.push(t.clone());
            }
        }
        Ok(out)
    }

    /// Groups codes at level `m` into a canonical type.
    pub fn type_from_elements(&self, level: u32, elems: &[Elem]) -> Result<OrbitType> {
        let mut codes: Vec<u32> = elems.iter().map(|&e| self.encode(e)).collect();
        codes.sort_unstable();
        codes.dedup();
        let set: HashSet<u32> = codes.iter().copied().collect();
        for &x in &codes {
            for &y in &codes {
                if !set.contains(&self.mul_codes(level, x, y)) {
                    return Err(Error::NotASubgroup("element set is not closed".into()));
                }
            }
        }
        Ok(OrbitType::Finite(self.canonicalize(level, &codes)))
    }

    /// Product of two codes at level `m`.
    pub fn mul_codes(&self, m: u32, x: u32, y: u32) -> u32 {
        let a = self.decode(x);
        let b = self.decode(y);
        let rot = if a.f == 0 { b.a } else { (m - b.a) % m };
        self.encode(Elem {
            a: (a.a + rot) % m,
            f: a.f ^ b.f,
            g: self.gamma.mul(a.g as usize, b.g as usize) as u32,
        })
    }

    pub(crate) fn cached_product(&self, h: &OrbitType, k: &OrbitType) -> Option<Arc<[(OrbitType, i64)]>> {
        self.caches.lock().expect("cache").products.get(&(h.clone(), k.clone())).cloned()
    }

    pub(crate) fn store_product(&self, h: &OrbitType, k: &OrbitType, terms: Arc<[(OrbitType, i64)]>) {
        let mut caches = self.caches.lock().expect("cache");
        caches.products.insert((k.clone(), h.clone()), terms.clone());
        caches.products.insert((h.clone(), k.clone()), terms);
    }

    /// Stabilisation of `n(L, H)` between `D_N` and `D_2N` for an explicit pair.
    pub fn n_stabilization(&self, l: &OrbitType, h: &OrbitType) -> Option<(u64, u64)> {
        match (l, h) {
            (OrbitType::Finite(lt), OrbitType::Finite(ht)) if ht.level % lt.level == 0 => {
                let m = 2 * ht.level;
                Some((self.finite_n_at(lt, ht, m), self.finite_n_at(lt, ht, 2 * m)))
            }
            _ => None,
        }
    }

    /// Every pair `(L, H)` for which `n(L, H)` has been computed so far.
    pub fn queried_pairs(&self) -> Vec<(OrbitType, OrbitType)> {
        let mut v: Vec<_> = self.caches.lock().expect("cache").n.keys().cloned().collect();
        v.sort();
        v
    }

    /// Snapshot of named Γ' classes with orders.
    pub fn class_table(&self) -> BTreeMap<usize, (String, usize, usize)> {
        self.classes
            .iter()
            .enumerate()
            .map(|(i, c)| {
                (
                    i,
                    (self.class_names[i].clone(), c.representative.order(), c.class_size),
                )
            })
            .collect()
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

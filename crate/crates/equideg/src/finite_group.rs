//! Finite permutation groups: closure, subgroup lattice, conjugacy, Weyl
//! groups, characters and orthogonal actions.
//!
//! Products follow the right-action convention `i^(st) = (i^s)^t`, so
//! `s.then(t)` applies `s` first.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;
pub const DEFAULT_SUBGROUP_CAP: usize = 10_000;
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NonPermutationInput(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Parses 1-based cycle notation such as `(1,2)(3,4)` or `()`.
    pub fn from_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let bad = || Error::NonPermutationInput(s.to_string());
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let body = &rest[1..close];
            let pts = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if pts.iter().any(|&p| p == 0 || p > degree) {
                return Err(bad());
            }
            for i in 0..pts.len() {
                images[pts[i] - 1] = pts[(i + 1) % pts.len()] - 1;
            }
            rest = rest[close + 1..].trim_start();
        }
        Self::new(images).map_err(|_| bad())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extend(&self, degree: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.images.len()..degree);
        Self { images }
    }

    /// Shifts the permuted domain up by `offset`, fixing the first `offset` points.
    pub fn shift(&self, offset: usize) -> Self {
        let mut images: Vec<usize> = (0..offset).collect();
        images.extend(self.images.iter().map(|&x| x + offset));
        Self { images }
    }

    /// Restriction to the first `n` points, if they form an invariant set.
    pub fn restrict(&self, n: usize) -> Option<Self> {
        let r: Vec<usize> = self.images[..n].to_vec();
        r.iter().all(|&x| x < n).then_some(Self { images: r })
    }

    /// Cycle lengths in non-increasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for i in 0..self.degree() {
            if seen[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Permutation matrix with `(Mu)_i = u_{p(i)}`; a homomorphism for `then`.
    pub fn matrix(&self) -> DMatrix<f64> {
        let n = self.degree();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, self.images[i])] = 1.0;
        }
        m
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for i in 0..self.degree() {
            if seen[i] || self.images[i] == i {
                continue;
            }
            any = true;
            let mut cyc = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                cyc.push((j + 1).to_string());
                j = self.images[j];
            }
            write!(f, "({})", cyc.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

pub fn group_from_generators(degree: usize, generators: &[Permutation]) -> Result<FiniteGroup> {
    group_from_generators_capped(degree, generators, DEFAULT_ELEMENT_CAP)
}

pub fn group_from_generators_capped(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<FiniteGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::NonPermutationInput(format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
    }
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = elements[x].then(g);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::ClosureCapExceeded(cap));
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let gens = generators.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup::assemble(degree, elements, index, gens))
}

/// Direct product acting on disjoint domains: `g1` on the first points, `g2` after.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup> {
    let degree = g1.degree + g2.degree;
    let mut gens: Vec<Permutation> = g1
        .generators()
        .map(|p| p.extend(degree))
        .collect();
    gens.extend(g2.generators().map(|p| p.shift(g1.degree)));
    let g = group_from_generators(degree, &gens)?;
    debug_assert_eq!(g.order(), g1.order() * g2.order());
    Ok(g)
}

impl FiniteGroup {
    fn assemble(
        degree: usize,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        generators: Vec<usize>,
    ) -> Self {
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)] as u32);
                }
            }
            t
        });
        Self {
            degree,
            elements,
            index,
            generators,
            inverses,
            table,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generators
    }

    pub fn generators(&self) -> impl Iterator<Item = &Permutation> {
        self.generators.iter().map(|&i| &self.elements[i])
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g x g^-1`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Element conjugacy classes by orbit partition, ordered by first member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for x in 0..self.order() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..self.order()).map(|g| self.conj(g, x)).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members.into_iter().collect());
        }
        classes
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order(), (0..self.order()).collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(self.order(), vec![0])
    }

    /// Subgroup generated by the given element indices.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut members = BTreeSet::from([0usize]);
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_sorted(self.order(), members.into_iter().collect())
    }

    /// Checks closure and returns the subgroup with the given members.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if !set.contains(&0) || set.iter().any(|&m| m >= self.order()) {
            return Err(Error::NotASubgroup(format!("{members:?}")));
        }
        for &a in &set {
            if !set.contains(&self.inv(a)) {
                return Err(Error::NotASubgroup(format!("{members:?}")));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("{members:?}")));
                }
            }
        }
        Ok(Subgroup::from_sorted(self.order(), set.into_iter().collect()))
    }

    pub fn conjugate(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut m: Vec<usize> = h.members.iter().map(|&x| self.conj(g, x)).collect();
        m.sort_unstable();
        Subgroup::from_sorted(self.order(), m)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = (0..self.order())
            .filter(|&g| h.members.iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_sorted(self.order(), members)
    }

    /// All distinct conjugates of `h`, sorted.
    pub fn conjugates(&self, h: &Subgroup) -> Vec<Subgroup> {
        let set: BTreeSet<Subgroup> = (0..self.order()).map(|g| self.conjugate(g, h)).collect();
        set.into_iter().collect()
    }

    /// Lexicographically least conjugate; a class invariant.
    pub fn canonical_conjugate(&self, h: &Subgroup) -> Subgroup {
        (0..self.order())
            .map(|g| self.conjugate(g, h))
            .min()
            .expect("group is nonempty")
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        h.universe == self.order() && self.subgroup(&h.members).is_ok()
    }
}

/// A subgroup stored as a sorted member list plus a membership bitmap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
    bits: Vec<u64>,
    universe: usize,
}

impl Subgroup {
    fn from_sorted(universe: usize, members: Vec<usize>) -> Self {
        let mut bits = vec![0u64; universe.div_ceil(64)];
        for &m in &members {
            bits[m / 64] |= 1 << (m % 64);
        }
        Self {
            members,
            bits,
            universe,
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.bits[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|&x| other.contains(x))
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub class_size: usize,
    pub name: Option<String>,
}

pub fn subgroup_classes(g: &FiniteGroup) -> Result<Vec<SubgroupClass>> {
    subgroup_classes_capped(g, DEFAULT_SUBGROUP_CAP)
}

/// Cyclic-extension enumeration: every subgroup is `<H, x>` for a class
/// representative `H` of a smaller subgroup, so extending representatives only
/// reaches every class.
pub fn subgroup_classes_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupClass>> {
    if g.order() > cap {
        return Err(Error::ClosureCapExceeded(cap));
    }
    let mut reps: Vec<Subgroup> = vec![g.trivial()];
    let mut keys: BTreeSet<Subgroup> = BTreeSet::from([g.canonical_conjugate(&g.trivial())]);
    let mut frontier = vec![g.trivial()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for x in 0..g.order() {
                if h.contains(x) {
                    continue;
                }
                let mut gens: Vec<usize> = h.members.clone();
                gens.push(x);
                let k = g.generate(&gens);
                let key = g.canonical_conjugate(&k);
                if keys.insert(key.clone()) {
                    reps.push(key.clone());
                    next.push(key);
                }
            }
        }
        frontier = next;
    }
    let mut classes: Vec<SubgroupClass> = reps
        .into_iter()
        .map(|h| {
            let class_size = g.order() / g.normalizer(&h).order();
            SubgroupClass {
                representative: h,
                class_size,
                name: None,
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.representative.order(), a.class_size, &a.representative).cmp(&(
            b.representative.order(),
            b.class_size,
            &b.representative,
        ))
    });
    Ok(classes)
}

/// Index of the class containing `h`.
pub fn class_index(g: &FiniteGroup, classes: &[SubgroupClass], h: &Subgroup) -> Option<usize> {
    let key = g.canonical_conjugate(h);
    classes.iter().position(|c| c.representative == key)
}

pub fn weyl_order(g: &FiniteGroup, h: &Subgroup) -> Result<usize> {
    if !g.is_subgroup(h) {
        return Err(Error::NotASubgroup(format!("{:?}", h.members)));
    }
    Ok(g.normalizer(h).order() / h.order())
}

/// Number of conjugates of the class representative that contain `h`.
pub fn n_count(g: &FiniteGroup, h: &Subgroup, k: &SubgroupClass) -> Result<usize> {
    if !g.is_subgroup(h) {
        return Err(Error::NotASubgroup(format!("{:?}", h.members)));
    }
    if k.representative.order() % h.order() != 0 {
        return Ok(0);
    }
    Ok(g
        .conjugates(&k.representative)
        .iter()
        .filter(|c| h.is_subset_of(c))
        .count())
}

/// Rational (hence integral) character table of a finite group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub labels: Vec<String>,
    pub class_reps: Vec<Permutation>,
    pub class_sizes: Vec<usize>,
    pub characters: Vec<Vec<i64>>,
    element_class: Vec<usize>,
}

impl CharacterTable {
    pub fn new(
        g: &FiniteGroup,
        labels: Vec<String>,
        class_reps: Vec<Permutation>,
        characters: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let classes = g.conjugacy_classes();
        let mut element_class = vec![usize::MAX; g.order()];
        let mut class_sizes = Vec::with_capacity(class_reps.len());
        for (ci, rep) in class_reps.iter().enumerate() {
            let idx = g
                .index_of(rep)
                .ok_or_else(|| Error::Schema(format!("class representative {rep} not in group")))?;
            let cls = classes.iter().find(|c| c.contains(&idx)).expect("partition");
            for &m in cls {
                element_class[m] = ci;
            }
            class_sizes.push(cls.len());
        }
        if element_class.contains(&usize::MAX) || class_reps.len() != classes.len() {
            return Err(Error::Schema(
                "character table classes do not cover the group".into(),
            ));
        }
        if characters.iter().any(|row| row.len() != class_reps.len()) || labels.len() != characters.len() {
            return Err(Error::Schema("character table shape mismatch".into()));
        }
        let t = Self {
            labels,
            class_reps,
            class_sizes,
            characters,
            element_class,
        };
        if !t.is_orthonormal(g.order()) {
            return Err(Error::Schema("character rows are not orthonormal".into()));
        }
        Ok(t)
    }

    fn is_orthonormal(&self, order: usize) -> bool {
        let r = self.characters.len();
        (0..r).all(|i| {
            (0..r).all(|j| {
                let s: i64 = (0..self.class_sizes.len())
                    .map(|c| self.class_sizes[c] as i64 * self.characters[i][c] * self.characters[j][c])
                    .sum();
                s == if i == j { order as i64 } else { 0 }
            })
        })
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn dim(&self, j: usize) -> usize {
        self.characters[j][self.element_class[0]] as usize
    }

    pub fn value(&self, j: usize, element: usize) -> i64 {
        self.characters[j][self.element_class[element]]
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.element_class[element]
    }
}

/// Orthogonal matrices for every group element, built from generator images.
#[derive(Clone, Debug)]
pub struct OrthogonalAction {
    dim: usize,
    matrices: Vec<DMatrix<f64>>,
}

impl OrthogonalAction {
    /// Extends generator matrices to the whole group along a breadth-first
    /// word tree and checks consistency on every edge.
    pub fn from_generators(g: &FiniteGroup, gen_matrices: &[DMatrix<f64>]) -> Result<Self> {
        if gen_matrices.len() != g.generator_indices().len() {
            return Err(Error::Schema("one matrix per generator expected".into()));
        }
        let dim = gen_matrices.first().map_or(0, |m| m.nrows());
        for m in gen_matrices {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::Schema("generator matrices must be square of equal size".into()));
            }
            let err = (m.transpose() * m - DMatrix::identity(dim, dim)).abs().max();
            if err > 1e-12 {
                return Err(Error::Schema(format!("generator matrix not orthogonal ({err:e})")));
            }
        }
        let mut mats: Vec<Option<DMatrix<f64>>> = vec![None; g.order()];
        mats[0] = Some(DMatrix::identity(dim, dim));
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mx = mats[x].clone().expect("visited");
            for (k, &gi) in g.generator_indices().iter().enumerate() {
                let y = g.mul(x, gi);
                let my = &mx * &gen_matrices[k];
                match &mats[y] {
                    Some(existing) => {
                        if (existing - &my).abs().max() > 1e-9 {
                            return Err(Error::Schema(
                                "generator matrices do not define a representation".into(),
                            ));
                        }
                    }
                    None => {
                        mats[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(Self {
            dim,
            matrices: mats.into_iter().map(|m| m.expect("group is generated")).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, element: usize) -> &DMatrix<f64> {
        &self.matrices[element]
    }

    pub fn trace(&self, element: usize) -> f64 {
        self.matrices[element].trace()
    }
}

fn snap(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < 1e-9).then_some(r as i64)
}

/// Multiplicities `<chi_V, chi_i>` of every irreducible in the action.
pub fn isotypic_decompose(
    g: &FiniteGroup,
    action: &OrthogonalAction,
    table: &CharacterTable,
) -> Result<Vec<(String, usize)>> {
    let n = g.order() as f64;
    let mut out = Vec::with_capacity(table.len());
    for j in 0..table.len() {
        let s: f64 = (0..g.order())
            .map(|x| action.trace(x) * table.value(j, x) as f64)
            .sum::<f64>()
            / n;
        match snap(s) {
            Some(v) if v >= 0 => out.push((table.labels[j].clone(), v as usize)),
            _ => {
                return Err(Error::NonIntegralMultiplicity {
                    label: table.labels[j].clone(),
                    value: s,
                })
            }
        }
    }
    Ok(out)
}

/// `dim V^H` by trace averaging.
pub fn fixed_dim(action: &OrthogonalAction, h: &Subgroup) -> Result<usize> {
    let s: f64 = h.members().iter().map(|&x| action.trace(x)).sum::<f64>() / h.order() as f64;
    match snap(s) {
        Some(v) if v >= 0 => Ok(v as usize),
        _ => Err(Error::NonIntegralTrace(s)),
    }
}

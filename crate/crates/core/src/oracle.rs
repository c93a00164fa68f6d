//! Brute-force evaluation over explicitly listed finite modules.
//!
//! Nothing here touches Smith forms or invariant factors. Elements are listed
//! from the Hermite form of the relations, submodules are element sets,
//! predicates quantify over elements, Hom is found by searching generator
//! images, tensor products by presenting the bilinear relations, and
//! completions by building the inverse system of cosets. Module-valued
//! answers are compared through [`ModuleShape`], which records for every
//! prime power `q^k` how many elements it kills; for finite modules over a
//! principal ideal domain that determines the isomorphism class.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::fpmodule::PresentedModule;
use crate::functors::{gamma, hom_module, lambda, tensor_module};
use crate::primality::{global_predicate, local_predicate, GlobalKind, LocalKind};
use crate::ring::{BaseRing, Element, Ideal, RingContext};

pub const DEFAULT_BOUND: usize = 64;
pub const HOM_TENSOR_BOUND: usize = 36;
/// Cap on the number of homomorphisms (and search nodes) the Hom search visits.
pub const HOM_SEARCH_LIMIT: usize = 1 << 16;
/// Cap on the size of fast-path outputs converted to shapes.
const SHAPE_BOUND: usize = 1 << 16;

/// An explicitly enumerated finite module.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    module: PresentedModule,
    elements: Vec<Vec<Element>>,
    index: HashMap<Vec<Element>, usize>,
}

impl FiniteModule {
    pub fn build(m: &PresentedModule, bound: usize) -> Result<Self> {
        let diag = m.hermite_diagonal().ok_or(Error::InfiniteModule)?;
        let ring = m.ring();
        let mut total: u128 = 1;
        for d in &diag {
            total = total.saturating_mul(ring.residue_count(d).unwrap_or(u128::MAX));
            if total > bound as u128 {
                return Err(Error::SizeBoundExceeded { bound });
            }
        }
        let ranges: Vec<Vec<Element>> = diag.iter().map(|d| ring.residues(d)).collect();
        let mut elements: Vec<Vec<Element>> = vec![Vec::new()];
        for r in &ranges {
            elements = elements
                .into_iter()
                .flat_map(|prefix| {
                    r.iter().map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c.clone());
                        v
                    })
                })
                .collect();
        }
        elements.sort_by(|a, b| m.cmp_elements(a, b));
        let index = elements.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(FiniteModule { module: m.clone(), elements, index })
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<Element>] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &[Element] {
        &self.elements[i]
    }

    pub fn index_of(&self, v: &[Element]) -> usize {
        self.index[&self.module.reduce(v)]
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.module.add(&self.elements[a], &self.elements[b]))
    }

    /// Multiplication by `r` as a table over element indices.
    pub fn times(&self, r: &Element) -> Vec<usize> {
        self.elements.iter().map(|v| self.index_of(&self.module.scale(r, v))).collect()
    }

    pub fn all(&self) -> HashSet<usize> {
        (0..self.len()).collect()
    }

    fn listed(&self, set: &HashSet<usize>) -> Vec<Vec<Element>> {
        let mut ix: Vec<usize> = set.iter().copied().collect();
        ix.sort_unstable();
        ix.into_iter().map(|i| self.elements[i].clone()).collect()
    }
}

fn image(table: &[usize]) -> HashSet<usize> {
    table.iter().copied().collect()
}

fn kernel_of(table: &[usize]) -> HashSet<usize> {
    (0..table.len()).filter(|&i| table[i] == 0).collect()
}

fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&i| outer[i]).collect()
}

/// Scalars whose kill counts classify finite modules of a given order:
/// prime powers `q^k` with `|R/(q^k)|` at most the order.
fn classifying_scalars(ring: BaseRing, order: usize) -> Vec<Element> {
    let mut out = Vec::new();
    if order <= 1 {
        return out;
    }
    match ring {
        BaseRing::Integers => {
            for q in 2..=order {
                if !order.is_multiple_of(q) || !ring.is_irreducible(&Element::int(q as i64)) {
                    continue;
                }
                let mut pk = q;
                while pk <= order {
                    out.push(Element::int(pk as i64));
                    pk *= q;
                }
            }
        }
        BaseRing::Polynomials { characteristic: p } => {
            let mut dim = 0;
            let mut acc = 1usize;
            while acc < order {
                acc *= p as usize;
                dim += 1;
            }
            for deg in 1..=dim {
                let mut lead = vec![0i64; deg + 1];
                lead[deg] = 1;
                let x_deg = ring.poly(&lead);
                for r in ring.residues(&x_deg) {
                    let q = ring.add(&x_deg, &r);
                    if !ring.is_irreducible(&q) {
                        continue;
                    }
                    let mut pk = q.clone();
                    let mut d = deg;
                    while d <= dim {
                        out.push(pk.clone());
                        pk = ring.mul(&pk, &q);
                        d += deg;
                    }
                }
            }
        }
    }
    out
}

/// Isomorphism invariant of a finite module: its order and, for every
/// classifying scalar, the number of elements it kills.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleShape {
    pub order: usize,
    pub kill_counts: Vec<(Element, usize)>,
}

impl ModuleShape {
    /// Shape of an abstract finite module given by its element list and
    /// a test for `d · x = 0`.
    pub fn of<T>(ring: BaseRing, elements: &[T], killed: impl Fn(&Element, &T) -> bool) -> Self {
        let order = elements.len();
        let kill_counts = classifying_scalars(ring, order)
            .into_iter()
            .map(|d| {
                let c = elements.iter().filter(|x| killed(&d, x)).count();
                (d, c)
            })
            .collect();
        ModuleShape { order, kill_counts }
    }

    pub fn of_finite(fm: &FiniteModule) -> Self {
        let ring = fm.module.ring();
        let idx: Vec<usize> = (0..fm.len()).collect();
        ModuleShape::of(ring, &idx, |d, &i| fm.module.is_zero_element(&fm.module.scale(d, fm.element(i))))
    }

    pub fn of_module(m: &PresentedModule, bound: usize) -> Result<Self> {
        Ok(Self::of_finite(&FiniteModule::build(m, bound)?))
    }
}

/// Elements of `M` killed by `a`.
pub fn annihilator(fm: &FiniteModule, a: &Element) -> HashSet<usize> {
    kernel_of(&fm.times(a))
}

/// `aM` as an element set.
pub fn scalar_multiples(fm: &FiniteModule, a: &Element) -> HashSet<usize> {
    image(&fm.times(a))
}

/// Elements killed by some power of `a`.
pub fn torsion(fm: &FiniteModule, a: &Element) -> HashSet<usize> {
    let t = fm.times(a);
    (0..fm.len())
        .filter(|&i| {
            let mut x = i;
            for _ in 0..=fm.len() {
                if x == 0 {
                    return true;
                }
                x = t[x];
            }
            false
        })
        .collect()
}

/// The inverse system `M / a^k M`, built until the chain `a^k M`
/// stabilizes, together with its compatible sequences.
#[derive(Clone, Debug)]
pub struct InverseLimit {
    /// `coset[k][m]`: smallest element index in `m + a^{k+1} M`.
    coset: Vec<Vec<usize>>,
    /// Compatible sequences of coset representatives, one per level.
    sequences: Vec<Vec<usize>>,
}

impl InverseLimit {
    pub fn build(fm: &FiniteModule, a: &Element) -> Self {
        let t = fm.times(a);
        let mut power = t.clone();
        let mut sub = image(&power);
        let mut levels = vec![sub.clone()];
        loop {
            power = compose(&t, &power);
            let next = image(&power);
            if next == sub {
                break;
            }
            levels.push(next.clone());
            sub = next;
        }
        let coset: Vec<Vec<usize>> = levels
            .iter()
            .map(|s| (0..fm.len()).map(|m| s.iter().map(|&p| fm.add(m, p)).min().expect("0 in submodule")).collect())
            .collect();
        let mut sequences: Vec<Vec<usize>> = {
            let mut reps: Vec<usize> = coset[0].clone();
            reps.sort_unstable();
            reps.dedup();
            reps.into_iter().map(|c| vec![c]).collect()
        };
        for k in 1..coset.len() {
            let mut reps: Vec<usize> = coset[k].clone();
            reps.sort_unstable();
            reps.dedup();
            let mut extended = Vec::new();
            for s in &sequences {
                for &c in &reps {
                    if coset[k - 1][c] == s[k - 1] {
                        let mut t = s.clone();
                        t.push(c);
                        extended.push(t);
                    }
                }
            }
            sequences = extended;
        }
        InverseLimit { coset, sequences }
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Image of `m` under the natural map.
    pub fn image_of(&self, m: usize) -> Vec<usize> {
        self.coset.iter().map(|c| c[m]).collect()
    }

    pub fn shape(&self, fm: &FiniteModule) -> ModuleShape {
        let ring = fm.module.ring();
        ModuleShape::of(ring, &self.sequences, |d, s| {
            s.iter().enumerate().all(|(k, &c)| {
                let dc = fm.index_of(&fm.module.scale(d, fm.element(c)));
                self.coset[k][dc] == self.coset[k][0]
            })
        })
    }

    /// Whether the natural map `M → lim M/a^kM` is bijective.
    pub fn natural_map_bijective(&self, fm: &FiniteModule) -> bool {
        let images: HashSet<Vec<usize>> = (0..fm.len()).map(|m| self.image_of(m)).collect();
        images.len() == fm.len() && self.sequences.len() == fm.len()
    }
}

/// All homomorphisms `M → N` as tuples of generator images.
pub fn homomorphisms(source: &PresentedModule, target: &FiniteModule) -> Result<Vec<Vec<usize>>> {
    let g = source.generator_count();
    let relations = source.full_relation_rows();
    // relations checked as soon as their last nonzero coordinate is assigned
    let mut due: Vec<Vec<&Vec<Element>>> = vec![Vec::new(); g];
    for r in &relations {
        if let Some(last) = r.iter().rposition(|e| !e.is_zero()) {
            due[last].push(r);
        }
    }
    let scale: Vec<HashMap<Element, Vec<usize>>> = (0..g)
        .map(|j| {
            let mut tables = HashMap::new();
            for r in &due {
                for row in r {
                    tables.entry(row[j].clone()).or_insert_with(|| target.times(&row[j]));
                }
            }
            tables
        })
        .collect();
    let mut out = Vec::new();
    let mut nodes = 0usize;
    let mut images = vec![0usize; g];
    search(target, &due, &scale, 0, &mut images, &mut out, &mut nodes)?;
    Ok(out)
}

fn search(
    target: &FiniteModule,
    due: &[Vec<&Vec<Element>>],
    scale: &[HashMap<Element, Vec<usize>>],
    j: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    nodes: &mut usize,
) -> Result<()> {
    if j == images.len() {
        out.push(images.clone());
        if out.len() > HOM_SEARCH_LIMIT {
            return Err(Error::SizeBoundExceeded { bound: HOM_SEARCH_LIMIT });
        }
        return Ok(());
    }
    for y in 0..target.len() {
        *nodes += 1;
        if *nodes > 16 * HOM_SEARCH_LIMIT {
            return Err(Error::SizeBoundExceeded { bound: HOM_SEARCH_LIMIT });
        }
        images[j] = y;
        let ok = due[j].iter().all(|row| {
            let mut acc = 0;
            for (c, coef) in row.iter().enumerate().take(j + 1) {
                if !coef.is_zero() {
                    acc = target.add(acc, scale[c][coef][images[c]]);
                }
            }
            acc == 0
        });
        if ok {
            search(target, due, scale, j + 1, images, out, nodes)?;
        }
    }
    Ok(())
}

/// `M ⊗ N` presented on generator pairs by the bilinear relations.
pub fn tensor_presentation(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    if m.context() != n.context() {
        return Err(Error::ContextMismatch);
    }
    let ring = m.ring();
    let (gm, gn) = (m.generator_count(), n.generator_count());
    let mut rows = Vec::new();
    for r in m.full_relation_rows() {
        for j in 0..gn {
            let mut row = vec![ring.zero(); gm * gn];
            for i in 0..gm {
                row[i * gn + j] = r[i].clone();
            }
            rows.push(row);
        }
    }
    for s in n.full_relation_rows() {
        for i in 0..gm {
            let mut row = vec![ring.zero(); gm * gn];
            for j in 0..gn {
                row[i * gn + j] = s[j].clone();
            }
            rows.push(row);
        }
    }
    PresentedModule::from_rows(m.context(), gm * gn, rows)
}

/// A question answered both by the fast path and by brute force.
#[derive(Clone, Debug)]
pub enum Query {
    Annihilator { module: PresentedModule, ideal: Ideal },
    ScalarSubmodule { module: PresentedModule, ideal: Ideal },
    Gamma { module: PresentedModule, ideal: Ideal },
    Lambda { module: PresentedModule, ideal: Ideal },
    Hom { source: PresentedModule, target: PresentedModule },
    Tensor { left: PresentedModule, right: PresentedModule },
    LocalPredicate { module: PresentedModule, kind: LocalKind, i: Ideal, j: Option<Ideal> },
    GlobalPredicate { module: PresentedModule, kind: GlobalKind },
}

impl Query {
    pub fn target_name(&self) -> &'static str {
        match self {
            Query::Annihilator { .. } => "annihilator",
            Query::ScalarSubmodule { .. } => "scalar_submodule",
            Query::Gamma { .. } => "gamma",
            Query::Lambda { .. } => "lambda",
            Query::Hom { .. } => "hom",
            Query::Tensor { .. } => "tensor",
            Query::LocalPredicate { .. } => "local_predicate",
            Query::GlobalPredicate { .. } => "global_predicate",
        }
    }
}

/// Answers in a codomain shared by the oracle and the fast path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Elements(Vec<Vec<Element>>),
    Shape(ModuleShape),
    Verdict(bool),
}

/// Ring elements standing in for "every element of R" when quantifying
/// over a finite module: all residues of a quotient context, otherwise all
/// residues modulo something the module's annihilator divides.
pub fn ring_elements_for(fm: &FiniteModule) -> Vec<Element> {
    let ctx = fm.module.context();
    if ctx.is_quotient() {
        return ctx.ring_elements().expect("quotient context");
    }
    let ring = ctx.base();
    match ring {
        BaseRing::Integers => ring.residues(&Element::int(fm.len().max(1) as i64)),
        BaseRing::Polynomials { characteristic: p } => {
            let mut dim = 0;
            let mut acc = 1usize;
            while acc < fm.len() {
                acc *= p as usize;
                dim += 1;
            }
            let mut lead = vec![0i64; dim + 1];
            lead[dim] = 1;
            ring.residues(&ring.poly(&lead))
        }
    }
}

/// Definitional check of a local predicate for generators `a` (and `b`).
pub fn local_verdict(fm: &FiniteModule, kind: LocalKind, a: &Element, b: Option<&Element>) -> bool {
    let ta = fm.times(a);
    let all = fm.all();
    let zero: HashSet<usize> = [0].into_iter().collect();
    match kind {
        LocalKind::IPrime => {
            let im_zero = ta.iter().all(|&y| y == 0);
            (0..fm.len()).all(|m| ta[m] != 0 || m == 0 || im_zero)
        }
        LocalKind::IJPrime => {
            let tb = fm.times(b.expect("pair kind"));
            let tab = compose(&ta, &tb);
            (0..fm.len()).all(|m| tab[m] != 0 || ta[m] == 0 || tb[m] == 0)
        }
        LocalKind::IReduced => {
            let taa = compose(&ta, &ta);
            (0..fm.len()).all(|m| taa[m] != 0 || ta[m] == 0)
        }
        LocalKind::ICoprime => {
            let im = image(&ta);
            im == zero || im == all
        }
        LocalKind::IJCoprime => {
            let tb = fm.times(b.expect("pair kind"));
            let ijm = image(&compose(&ta, &tb));
            ijm == image(&ta) || ijm == image(&tb)
        }
        LocalKind::ICoreduced => image(&ta) == image(&compose(&ta, &ta)),
        LocalKind::ITorsion => torsion(fm, a).len() == fm.len(),
        LocalKind::IComplete => InverseLimit::build(fm, a).natural_map_bijective(fm),
    }
}

/// Definitional check of a global predicate, quantifying over ring
/// elements rather than ideals.
pub fn global_verdict(fm: &FiniteModule, kind: GlobalKind) -> bool {
    let scalars = ring_elements_for(fm);
    let tables: Vec<Vec<usize>> = scalars.iter().map(|r| fm.times(r)).collect();
    let images: Vec<HashSet<usize>> = tables.iter().map(|t| image(t)).collect();
    let all = fm.all();
    let zero: HashSet<usize> = [0].into_iter().collect();
    let n = fm.len();
    match kind {
        GlobalKind::Prime => {
            tables.iter().zip(&images).all(|(t, im)| *im == zero || (0..n).all(|m| t[m] != 0 || m == 0))
        }
        GlobalKind::Reduced => tables.iter().all(|t| (0..n).all(|m| t[t[m]] != 0 || t[m] == 0)),
        GlobalKind::Coprime => images.iter().all(|im| *im == zero || *im == all),
        GlobalKind::Coreduced => tables.iter().zip(&images).all(|(t, im)| *im == image(&compose(t, t))),
        GlobalKind::WeaklyPrime => tables
            .iter()
            .enumerate()
            .all(|(x, tr)| tables[x..].iter().all(|ts| (0..n).all(|m| tr[ts[m]] != 0 || tr[m] == 0 || ts[m] == 0))),
        GlobalKind::WeaklyCoprime => tables.iter().enumerate().all(|(x, tr)| {
            tables[x..].iter().enumerate().all(|(y, ts)| {
                let rs = image(&compose(tr, ts));
                rs == images[x] || rs == images[x + y]
            })
        }),
    }
}

fn finite(m: &PresentedModule, bound: usize) -> Result<FiniteModule> {
    FiniteModule::build(m, bound)
}

/// Evaluate a query by brute force. `bound` caps module sizes; Hom and
/// tensor inputs are additionally capped by [`HOM_TENSOR_BOUND`].
pub fn evaluate(q: &Query, bound: usize) -> Result<Answer> {
    let pair_bound = bound.min(HOM_TENSOR_BOUND);
    Ok(match q {
        Query::Annihilator { module, ideal } => {
            let fm = finite(module, bound)?;
            Answer::Elements(fm.listed(&annihilator(&fm, ideal.generator())))
        }
        Query::ScalarSubmodule { module, ideal } => {
            let fm = finite(module, bound)?;
            Answer::Elements(fm.listed(&scalar_multiples(&fm, ideal.generator())))
        }
        Query::Gamma { module, ideal } => {
            let fm = finite(module, bound)?;
            Answer::Elements(fm.listed(&torsion(&fm, ideal.generator())))
        }
        Query::Lambda { module, ideal } => {
            let fm = finite(module, bound)?;
            Answer::Shape(InverseLimit::build(&fm, ideal.generator()).shape(&fm))
        }
        Query::Hom { source, target } => {
            if source.context() != target.context() {
                return Err(Error::ContextMismatch);
            }
            finite(source, pair_bound)?;
            let tn = finite(target, pair_bound)?;
            let maps = homomorphisms(source, &tn)?;
            let ring = source.ring();
            let tables: HashMap<Element, Vec<usize>> = classifying_scalars(ring, maps.len())
                .into_iter()
                .map(|d| {
                    let t = tn.times(&d);
                    (d, t)
                })
                .collect();
            Answer::Shape(ModuleShape::of(ring, &maps, |d, f| f.iter().all(|&y| tables[d][y] == 0)))
        }
        Query::Tensor { left, right } => {
            finite(left, pair_bound)?;
            finite(right, pair_bound)?;
            let t = tensor_presentation(left, right)?;
            Answer::Shape(ModuleShape::of_module(&t, SHAPE_BOUND)?)
        }
        Query::LocalPredicate { module, kind, i, j } => {
            if i.context() != module.context() || j.as_ref().is_some_and(|j| j.context() != module.context()) {
                return Err(Error::ContextMismatch);
            }
            let fm = finite(module, bound)?;
            let b = j.as_ref().map(|j| j.generator());
            if kind.needs_two_ideals() != b.is_some() {
                return Err(if b.is_some() {
                    Error::UnexpectedSecondIdeal(kind.name())
                } else {
                    Error::MissingSecondIdeal(kind.name())
                });
            }
            Answer::Verdict(local_verdict(&fm, *kind, i.generator(), b))
        }
        Query::GlobalPredicate { module, kind } => Answer::Verdict(global_verdict(&finite(module, bound)?, *kind)),
    })
}

/// The same query answered by the main engine, converted to the shared
/// codomain.
pub fn fast_path(q: &Query) -> Result<Answer> {
    let members = |m: &PresentedModule, s: &crate::fpmodule::Submodule| -> Result<Answer> {
        let fm = FiniteModule::build(m, SHAPE_BOUND)?;
        Ok(Answer::Elements(fm.elements().iter().filter(|v| s.contains(v)).cloned().collect()))
    };
    Ok(match q {
        Query::Annihilator { module, ideal } => members(module, &module.annihilator_of(ideal)?)?,
        Query::ScalarSubmodule { module, ideal } => members(module, &module.scalar_submodule(ideal)?)?,
        Query::Gamma { module, ideal } => members(module, &gamma(module, ideal)?)?,
        Query::Lambda { module, ideal } => match lambda(module, ideal)? {
            Ok(l) => Answer::Shape(ModuleShape::of_module(&l, SHAPE_BOUND)?),
            Err(_) => return Err(Error::InfiniteModule),
        },
        Query::Hom { source, target } => {
            Answer::Shape(ModuleShape::of_module(&hom_module(source, target)?, SHAPE_BOUND)?)
        }
        Query::Tensor { left, right } => {
            Answer::Shape(ModuleShape::of_module(&tensor_module(left, right)?, SHAPE_BOUND)?)
        }
        Query::LocalPredicate { module, kind, i, j } => {
            Answer::Verdict(local_predicate(module, *kind, i, j.as_ref())?.holds)
        }
        Query::GlobalPredicate { module, kind } => Answer::Verdict(global_predicate(module, *kind)?.holds),
    })
}

/// Outcome of checking one query against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree {
        fast: Answer,
        oracle: Answer,
    },
    /// The query lies outside the size bounds.
    Skipped,
}

pub fn cross_check(q: &Query, bound: usize) -> Result<Agreement> {
    let oracle = match evaluate(q, bound) {
        Ok(a) => a,
        Err(Error::SizeBoundExceeded { .. }) | Err(Error::InfiniteModule) => return Ok(Agreement::Skipped),
        Err(e) => return Err(e),
    };
    let fast = fast_path(q)?;
    Ok(if fast == oracle { Agreement::Agree } else { Agreement::Disagree { fast, oracle } })
}

/// Ring context helper for tests and campaigns: every ideal of a finite
/// quotient context listed by brute force over its elements.
pub fn ideals_by_elements(ctx: &RingContext) -> Result<Vec<Ideal>> {
    let mut seen: Vec<Ideal> = Vec::new();
    for r in ctx.ring_elements()? {
        let i = Ideal::principal(ctx, &r)?;
        if !seen.contains(&i) {
            seen.push(i);
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(n: i64) -> Element {
        Element::int(n)
    }

    fn zm(n: i64) -> PresentedModule {
        PresentedModule::cyclic(&RingContext::integers(), &zi(n)).unwrap()
    }

    fn ideal(n: i64) -> Ideal {
        Ideal::principal(&RingContext::integers(), &zi(n)).unwrap()
    }

    #[test]
    fn annihilator_of_three_on_z6() {
        let a = evaluate(&Query::Annihilator { module: zm(6), ideal: ideal(3) }, 64).unwrap();
        assert_eq!(a, Answer::Elements(vec![vec![zi(0)], vec![zi(2)], vec![zi(4)]]));
    }

    #[test]
    fn hom_z4_z6_has_two_maps() {
        let fm = FiniteModule::build(&zm(6), 64).unwrap();
        let maps = homomorphisms(&zm(4), &fm).unwrap();
        let images: Vec<_> = maps.iter().map(|f| fm.element(f[0])[0].clone()).collect();
        assert_eq!(images, vec![zi(0), zi(3)]);
        let shape = evaluate(&Query::Hom { source: zm(4), target: zm(6) }, 64).unwrap();
        assert_eq!(shape, Answer::Shape(ModuleShape::of_module(&zm(2), 64).unwrap()));
    }

    #[test]
    fn zero_ideal_is_prime_by_definition() {
        let q = Query::LocalPredicate { module: zm(6), kind: LocalKind::IPrime, i: ideal(0), j: None };
        assert_eq!(evaluate(&q, 64).unwrap(), Answer::Verdict(true));
    }

    #[test]
    fn shapes_separate_nonisomorphic_groups() {
        let z = RingContext::integers();
        let a = PresentedModule::from_factors(&z, &[zi(2), zi(2)]).unwrap();
        assert_ne!(ModuleShape::of_module(&a, 64).unwrap(), ModuleShape::of_module(&zm(4), 64).unwrap());
        let b = PresentedModule::from_factors(&z, &[zi(2), zi(3)]).unwrap();
        assert_eq!(ModuleShape::of_module(&b, 64).unwrap(), ModuleShape::of_module(&zm(6), 64).unwrap());
        let f2 = RingContext::polynomials(2);
        let r = f2.base();
        let c = PresentedModule::cyclic(&f2, &r.poly(&[0, 0, 1])).unwrap();
        let d = PresentedModule::from_factors(&f2, &[r.poly(&[0, 1]), r.poly(&[0, 1])]).unwrap();
        let e = PresentedModule::cyclic(&f2, &r.poly(&[0, 1, 1])).unwrap();
        let sc = ModuleShape::of_module(&c, 64).unwrap();
        assert_ne!(sc, ModuleShape::of_module(&d, 64).unwrap());
        assert_ne!(sc, ModuleShape::of_module(&e, 64).unwrap());
    }

    #[test]
    fn inverse_limit_of_z12_at_two() {
        let fm = FiniteModule::build(&zm(12), 64).unwrap();
        let lim = InverseLimit::build(&fm, &zi(2));
        assert_eq!(lim.len(), 4);
        assert_eq!(lim.shape(&fm), ModuleShape::of_module(&zm(4), 64).unwrap());
        assert!(!lim.natural_map_bijective(&fm));
    }

    #[test]
    fn tensor_by_bilinear_relations() {
        let t = tensor_presentation(&zm(4), &zm(6)).unwrap();
        assert_eq!(ModuleShape::of_module(&t, 64).unwrap(), ModuleShape::of_module(&zm(2), 64).unwrap());
    }

    #[test]
    fn ideals_by_elements_match_divisors() {
        let ctx = RingContext::integers_mod(12);
        let mut by_elements = ideals_by_elements(&ctx).unwrap();
        let mut listed = ctx.enumerate_ideals().unwrap();
        by_elements.sort_by_key(|i| i.to_string());
        listed.sort_by_key(|i| i.to_string());
        assert_eq!(by_elements, listed);
    }

    #[test]
    fn bounds_are_enforced() {
        let q = Query::Annihilator { module: zm(100), ideal: ideal(2) };
        assert_eq!(evaluate(&q, 64), Err(Error::SizeBoundExceeded { bound: 64 }));
        let q = Query::Gamma { module: PresentedModule::free(&RingContext::integers(), 1), ideal: ideal(2) };
        assert_eq!(evaluate(&q, 64), Err(Error::InfiniteModule));
    }
}

//! Finitely presented modules and their submodules.
//!
//! A module is `R^g / L` where `L` is the row space of the relation matrix
//! (plus `n·e_i` rows in a quotient context `R/(n)`). Elements are row
//! vectors of length `g`, brought to a canonical coset representative by
//! reduction against the Hermite form of `L`. Submodules keep generators and
//! decide membership the same way against the Hermite form of `S + L`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{hermite_form, kernel, smith_normal_form, Matrix, SmithDecomposition};
use crate::ring::{BaseRing, Element, Ideal, RingContext};
use crate::Relation;

/// Invariant factors `d_1 | d_2 | ...` (non-units) plus free rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    pub torsion_factors: Vec<Element>,
    pub free_rank: usize,
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.torsion_factors.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")?;
        if self.free_rank > 0 {
            write!(f, " + free rank {}", self.free_rank)?;
        }
        Ok(())
    }
}

/// Echelon basis of a lattice in `R^g` used for canonical reduction.
#[derive(Clone, Debug)]
struct LatticeBasis {
    rows: Vec<Vec<Element>>,
    pivot_cols: Vec<usize>,
}

impl LatticeBasis {
    fn of(ring: BaseRing, g: usize, generators: Vec<Vec<Element>>) -> Self {
        let m = Matrix::from_rows(ring, g, generators).expect("rectangular generators");
        let hf = hermite_form(&m);
        let rows = hf.pivots.iter().map(|&(r, _)| hf.h.row(r).to_vec()).collect();
        let pivot_cols = hf.pivots.iter().map(|&(_, c)| c).collect();
        LatticeBasis { rows, pivot_cols }
    }

    fn reduce(&self, ring: BaseRing, v: &[Element]) -> Vec<Element> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivot_cols) {
            if v[c].is_zero() {
                continue;
            }
            let q = ring.div_rem(&v[c], &row[c]).0;
            if q.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                *x = ring.sub(x, &ring.mul(&q, r));
            }
        }
        v
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[derive(Debug)]
struct ModuleData {
    ctx: RingContext,
    ngens: usize,
    relations: Matrix,
    lattice: LatticeBasis,
    smith: SmithDecomposition,
    factors: InvariantFactors,
}

/// A finitely presented module; cheap to clone.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    data: Arc<ModuleData>,
}

impl PartialEq for PresentedModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.ctx == other.data.ctx
                && self.data.ngens == other.data.ngens
                && self.data.relations == other.data.relations)
    }
}

impl Eq for PresentedModule {}

impl PresentedModule {
    /// The module with `g` generators subject to the rows of `relations`.
    pub fn present(ctx: &RingContext, g: usize, relations: Matrix) -> Result<Self> {
        if relations.cols() != g {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} columns for {g} generators",
                relations.cols()
            )));
        }
        if relations.ring() != ctx.base() {
            return Err(Error::ContextMismatch);
        }
        let ring = ctx.base();
        let mut full = relations.row_vecs();
        if let Some(n) = ctx.modulus() {
            for i in 0..g {
                let mut row = vec![ring.zero(); g];
                row[i] = n.clone();
                full.push(row);
            }
        }
        let lattice = LatticeBasis::of(ring, g, full.clone());
        let full_m = Matrix::from_rows(ring, g, full).expect("rectangular");
        let smith = smith_normal_form(&full_m);
        let diag = smith.diagonal();
        let factors = InvariantFactors {
            torsion_factors: diag.iter().filter(|d| !ring.is_unit(d)).cloned().collect(),
            free_rank: g - diag.len(),
        };
        Ok(PresentedModule {
            data: Arc::new(ModuleData { ctx: ctx.clone(), ngens: g, relations, lattice, smith, factors }),
        })
    }

    /// Convenience constructor from relation rows.
    pub fn from_rows(ctx: &RingContext, g: usize, rows: Vec<Vec<Element>>) -> Result<Self> {
        let m = Matrix::from_rows(ctx.base(), g, rows)?;
        Self::present(ctx, g, m)
    }

    /// `R/(d)`; `d = 0` gives the free module of rank one.
    pub fn cyclic(ctx: &RingContext, d: &Element) -> Result<Self> {
        Self::from_rows(ctx, 1, vec![vec![d.clone()]])
    }

    /// `⊕ R/(d_i)`, one generator per factor.
    pub fn from_factors(ctx: &RingContext, factors: &[Element]) -> Result<Self> {
        let g = factors.len();
        let ring = ctx.base();
        let rows = factors
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = vec![ring.zero(); g];
                row[i] = d.clone();
                row
            })
            .collect();
        Self::from_rows(ctx, g, rows)
    }

    pub fn free(ctx: &RingContext, g: usize) -> Self {
        Self::present(ctx, g, Matrix::zeros(ctx.base(), 0, g)).expect("free module")
    }

    pub fn zero(ctx: &RingContext) -> Self {
        Self::free(ctx, 0)
    }

    /// The ring as a module over itself (`R/(n)` in a quotient context).
    pub fn ring_module(ctx: &RingContext) -> Self {
        Self::free(ctx, 1)
    }

    pub fn context(&self) -> &RingContext {
        &self.data.ctx
    }

    pub fn ring(&self) -> BaseRing {
        self.data.ctx.base()
    }

    pub fn generator_count(&self) -> usize {
        self.data.ngens
    }

    pub fn relations(&self) -> &Matrix {
        &self.data.relations
    }

    pub fn invariant_factors(&self) -> &InvariantFactors {
        &self.data.factors
    }

    pub fn smith(&self) -> &SmithDecomposition {
        &self.data.smith
    }

    pub fn free_rank(&self) -> usize {
        self.data.factors.free_rank
    }

    pub fn is_zero_module(&self) -> bool {
        self.data.factors.free_rank == 0 && self.data.factors.torsion_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.data.lattice.rank() == self.data.ngens
    }

    /// Number of elements, if finite and representable.
    pub fn order(&self) -> Option<u128> {
        if !self.is_finite() {
            return None;
        }
        let ring = self.ring();
        self.data.factors.torsion_factors.iter().try_fold(1u128, |acc, d| acc.checked_mul(ring.residue_count(d)?))
    }

    /// Product of the invariant factors (the exponent of the torsion part is
    /// the last one); one for a torsion-free module.
    pub fn torsion_exponent(&self) -> Element {
        self.data.factors.torsion_factors.last().cloned().unwrap_or_else(|| self.ring().one())
    }

    fn check_vector(&self, v: &[Element]) -> Result<()> {
        if v.len() != self.data.ngens {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a module with {} generators",
                v.len(),
                self.data.ngens
            )));
        }
        for e in v {
            self.data.ctx.check(e)?;
        }
        Ok(())
    }

    /// Canonical coset representative.
    pub fn reduce(&self, v: &[Element]) -> Vec<Element> {
        self.data.lattice.reduce(self.ring(), v)
    }

    pub fn zero_element(&self) -> Vec<Element> {
        vec![self.ring().zero(); self.data.ngens]
    }

    pub fn basis_element(&self, j: usize) -> Vec<Element> {
        let mut v = self.zero_element();
        v[j] = self.ring().one();
        self.reduce(&v)
    }

    pub fn is_zero_element(&self, v: &[Element]) -> bool {
        self.reduce(v).iter().all(Element::is_zero)
    }

    pub fn add(&self, a: &[Element], b: &[Element]) -> Vec<Element> {
        let r = self.ring();
        let s: Vec<Element> = a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect();
        self.reduce(&s)
    }

    pub fn neg(&self, a: &[Element]) -> Vec<Element> {
        let r = self.ring();
        self.reduce(&a.iter().map(|x| r.neg(x)).collect::<Vec<_>>())
    }

    pub fn scale(&self, c: &Element, a: &[Element]) -> Vec<Element> {
        let r = self.ring();
        self.reduce(&a.iter().map(|x| r.mul(c, x)).collect::<Vec<_>>())
    }

    /// Deterministic order on canonical representatives.
    pub fn cmp_elements(&self, a: &[Element], b: &[Element]) -> Ordering {
        let r = self.ring();
        a.iter().zip(b).map(|(x, y)| r.cmp_canonical(x, y)).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
    }

    /// Diagonal of the Hermite form of the full relations, one entry per
    /// generator, when the module is finite. Canonical representatives are
    /// exactly the vectors with entry `j` a canonical residue modulo entry `j`.
    pub(crate) fn hermite_diagonal(&self) -> Option<Vec<Element>> {
        if !self.is_finite() {
            return None;
        }
        Some(self.data.lattice.rows.iter().zip(&self.data.lattice.pivot_cols).map(|(r, &c)| r[c].clone()).collect())
    }

    /// Full relation rows, including the implicit modulus rows.
    pub(crate) fn full_relation_rows(&self) -> Vec<Vec<Element>> {
        let ring = self.ring();
        let mut rows = self.data.relations.row_vecs();
        if let Some(n) = self.data.ctx.modulus() {
            for i in 0..self.data.ngens {
                let mut row = vec![ring.zero(); self.data.ngens];
                row[i] = n.clone();
                rows.push(row);
            }
        }
        rows
    }

    fn same_context(&self, other: &PresentedModule) -> Result<()> {
        if self.context() == other.context() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Structure-theorem comparison of invariant factors and free rank.
    pub fn is_isomorphic(&self, other: &PresentedModule) -> Result<bool> {
        self.same_context(other)?;
        Ok(self.data.factors == other.data.factors)
    }

    pub fn direct_sum(&self, other: &PresentedModule) -> Result<PresentedModule> {
        self.same_context(other)?;
        let rel = self.data.relations.block_diag(&other.data.relations);
        Self::present(self.context(), self.data.ngens + other.data.ngens, rel)
    }

    /// The submodule generated by `gens` (coordinate vectors).
    pub fn submodule(&self, gens: Vec<Vec<Element>>) -> Result<Submodule> {
        for v in &gens {
            self.check_vector(v)?;
        }
        Ok(Submodule::new(self.clone(), gens))
    }

    pub fn whole(&self) -> Submodule {
        Submodule::new(self.clone(), (0..self.data.ngens).map(|j| self.basis_element(j)).collect())
    }

    pub fn zero_submodule(&self) -> Submodule {
        Submodule::new(self.clone(), Vec::new())
    }

    /// `M/S`, presented by appending the generators of `S` as relations.
    pub fn quotient(&self, s: &Submodule) -> Result<PresentedModule> {
        if &s.ambient != self {
            return Err(Error::AmbientMismatch);
        }
        let extra = Matrix::from_rows(self.ring(), self.data.ngens, s.gens.clone())?;
        let rel = self.data.relations.stack(&extra)?;
        Self::present(self.context(), self.data.ngens, rel)
    }

    /// `IM`, generated by `gen(I)·e_j`.
    pub fn scalar_submodule(&self, ideal: &Ideal) -> Result<Submodule> {
        if ideal.context() != self.context() {
            return Err(Error::ContextMismatch);
        }
        let a = ideal.generator();
        Ok(Submodule::new(self.clone(), (0..self.data.ngens).map(|j| self.scale(a, &self.basis_element(j))).collect()))
    }

    /// `(S :_M I) = {m : I m ⊆ S}`; with `S = 0` this is `(0 :_M I)`.
    pub fn colon_submodule(&self, s: &Submodule, ideal: &Ideal) -> Result<Submodule> {
        if &s.ambient != self {
            return Err(Error::AmbientMismatch);
        }
        if ideal.context() != self.context() {
            return Err(Error::ContextMismatch);
        }
        let g = self.data.ngens;
        let ring = self.ring();
        let a = ideal.generator();
        if a.is_zero() {
            return Ok(self.whole());
        }
        // columns: a·e_i, then a basis of S + L; kernel vectors project to the colon
        let k = s.lattice.rank();
        let mut m = Matrix::zeros(ring, g, g + k);
        for i in 0..g {
            m[(i, i)] = a.clone();
        }
        for (j, row) in s.lattice.rows.iter().enumerate() {
            for i in 0..g {
                m[(i, g + j)] = row[i].clone();
            }
        }
        let ker = kernel(&m);
        let gens = (0..ker.cols()).map(|c| ker.column(c)[..g].to_vec()).collect();
        Ok(Submodule::new(self.clone(), gens))
    }

    /// `(0 :_M I)`.
    pub fn annihilator_of(&self, ideal: &Ideal) -> Result<Submodule> {
        self.colon_submodule(&self.zero_submodule(), ideal)
    }

    /// `(0 :_R M)`: the last invariant factor, `(0)` with a free summand,
    /// `(1)` for the zero module.
    pub fn annihilator_ideal(&self) -> Ideal {
        let ctx = self.context();
        if self.free_rank() > 0 {
            return Ideal::zero(ctx);
        }
        match self.data.factors.torsion_factors.last() {
            Some(d) => Ideal::principal(ctx, d).expect("factor lies in context"),
            None => Ideal::unit(ctx),
        }
    }

    /// Every element exactly once, as canonical representatives in
    /// canonical order.
    pub fn enumerate_elements(&self, bound: usize) -> Result<Vec<Vec<Element>>> {
        if !self.is_finite() {
            return Err(Error::InfiniteModule);
        }
        match self.order() {
            Some(n) if n <= bound as u128 => {}
            _ => return Err(Error::SizeBoundExceeded { bound }),
        }
        let ring = self.ring();
        let g = self.data.ngens;
        let smith = &self.data.smith;
        let diag = smith.diagonal();
        let ranges: Vec<Vec<Element>> = (0..g).map(|i| ring.residues(&diag[i])).collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; g];
        loop {
            let y: Vec<Element> = idx.iter().zip(&ranges).map(|(&i, r)| r[i].clone()).collect();
            out.push(self.reduce(&smith.v_inv.apply_left(&y)));
            let mut pos = 0;
            loop {
                if pos == g {
                    out.sort_by(|a, b| self.cmp_elements(a, b));
                    return Ok(out);
                }
                idx[pos] += 1;
                if idx[pos] < ranges[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}

impl fmt::Display for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} gens | {}> over {}", self.data.ngens, self.data.relations, self.data.ctx)
    }
}

/// A submodule of a presented module, given by generators.
#[derive(Clone, Debug)]
pub struct Submodule {
    ambient: PresentedModule,
    gens: Vec<Vec<Element>>,
    lattice: LatticeBasis,
}

impl Submodule {
    fn new(ambient: PresentedModule, gens: Vec<Vec<Element>>) -> Self {
        let mut reduced: Vec<Vec<Element>> = Vec::new();
        for v in gens {
            let r = ambient.reduce(&v);
            if r.iter().any(|e| !e.is_zero()) && !reduced.contains(&r) {
                reduced.push(r);
            }
        }
        let mut rows = reduced.clone();
        rows.extend(ambient.data.lattice.rows.iter().cloned());
        let lattice = LatticeBasis::of(ambient.ring(), ambient.data.ngens, rows);
        Submodule { ambient, gens: reduced, lattice }
    }

    pub fn ambient(&self) -> &PresentedModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<Element>] {
        &self.gens
    }

    /// Generators read off the Hermite basis of `S + relations`, reduced
    /// into the ambient module. Equal submodules give equal lists.
    pub fn canonical_generators(&self) -> Vec<Vec<Element>> {
        let mut out: Vec<Vec<Element>> = Vec::new();
        for row in &self.lattice.rows {
            let r = self.ambient.reduce(row);
            if r.iter().any(|e| !e.is_zero()) && !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Element]) -> bool {
        self.lattice.reduce(self.ambient.ring(), v).iter().all(Element::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        (0..self.ambient.data.ngens).all(|j| self.contains(&self.ambient.basis_element(j)))
    }

    fn within(&self, other: &Submodule) -> bool {
        self.gens.iter().all(|v| other.contains(v))
    }

    /// Extensional comparison.
    pub fn relate(&self, other: &Submodule) -> Result<Relation> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(Relation::from_inclusions(other.within(self), self.within(other)))
    }

    /// Extensional equality within a common ambient module.
    pub fn same_as(&self, other: &Submodule) -> bool {
        self.within(other) && other.within(self)
    }

    /// `S + T`.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Submodule::new(self.ambient.clone(), gens))
    }

    /// `S ∩ T`, from the kernel of `[S | -T]` against the relations.
    pub fn intersection(&self, other: &Submodule) -> Result<Submodule> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let ring = self.ambient.ring();
        let g = self.ambient.data.ngens;
        let (a, b) = (&self.gens, &other.gens);
        let l = &self.ambient.data.lattice.rows;
        let mut m = Matrix::zeros(ring, g, a.len() + b.len() + l.len());
        for i in 0..g {
            for (j, v) in a.iter().enumerate() {
                m[(i, j)] = v[i].clone();
            }
            for (j, v) in b.iter().enumerate() {
                m[(i, a.len() + j)] = ring.neg(&v[i]);
            }
            for (j, v) in l.iter().enumerate() {
                m[(i, a.len() + b.len() + j)] = v[i].clone();
            }
        }
        let ker = kernel(&m);
        let gens = (0..ker.cols())
            .map(|c| {
                let col = ker.column(c);
                let mut x = vec![ring.zero(); g];
                for (j, v) in a.iter().enumerate() {
                    for i in 0..g {
                        x[i] = ring.add(&x[i], &ring.mul(&col[j], &v[i]));
                    }
                }
                x
            })
            .collect();
        Ok(Submodule::new(self.ambient.clone(), gens))
    }

    /// `I S`.
    pub fn scaled(&self, ideal: &Ideal) -> Submodule {
        let a = ideal.generator();
        Submodule::new(self.ambient.clone(), self.gens.iter().map(|v| self.ambient.scale(a, v)).collect())
    }

    /// `S` as a module in its own right: `R^k / {c : Σ c_j s_j ∈ L}`.
    pub fn as_module(&self) -> PresentedModule {
        let ring = self.ambient.ring();
        let g = self.ambient.data.ngens;
        let k = self.gens.len();
        let l = &self.ambient.data.lattice.rows;
        let mut m = Matrix::zeros(ring, g, k + l.len());
        for i in 0..g {
            for (j, v) in self.gens.iter().enumerate() {
                m[(i, j)] = v[i].clone();
            }
            for (j, v) in l.iter().enumerate() {
                m[(i, k + j)] = v[i].clone();
            }
        }
        let ker = kernel(&m);
        let rows = (0..ker.cols()).map(|c| ker.column(c)[..k].to_vec()).collect();
        PresentedModule::from_rows(self.ambient.context(), k, rows).expect("kernel rows fit")
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, e) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zi(n: i64) -> Element {
        Element::int(n)
    }

    fn z_mod(n: i64) -> PresentedModule {
        PresentedModule::cyclic(&RingContext::integers(), &zi(n)).unwrap()
    }

    fn elems(m: &PresentedModule, s: &Submodule) -> Vec<i64> {
        m.enumerate_elements(1000)
            .unwrap()
            .into_iter()
            .filter(|v| s.contains(v))
            .map(|v| v[0].as_int().unwrap().try_into().unwrap())
            .collect()
    }

    #[test]
    fn present_examples() {
        assert_eq!(z_mod(6).invariant_factors().torsion_factors, vec![zi(6)]);
        let z = RingContext::integers();
        let m = PresentedModule::from_rows(&z, 2, vec![vec![zi(2), zi(0)], vec![zi(0), zi(3)]]).unwrap();
        assert_eq!(m.invariant_factors().torsion_factors, vec![zi(6)]);
        let free = PresentedModule::free(&z, 1);
        assert_eq!(free.free_rank(), 1);
        assert!(matches!(
            PresentedModule::present(&z, 2, Matrix::from_ints(&[&[1]])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn isomorphism_examples() {
        let z = RingContext::integers();
        let m = z_mod(2).direct_sum(&z_mod(3)).unwrap();
        assert!(m.is_isomorphic(&z_mod(6)).unwrap());
        assert!(!PresentedModule::free(&z, 1).is_isomorphic(&z_mod(2)).unwrap());
        assert!(PresentedModule::zero(&z).is_isomorphic(&PresentedModule::zero(&z)).unwrap());
        let z6 = RingContext::integers_mod(6);
        assert_eq!(PresentedModule::zero(&z6).is_isomorphic(&PresentedModule::zero(&z)), Err(Error::ContextMismatch));
    }

    #[test]
    fn submodule_examples() {
        let m = z_mod(6);
        let s = m.submodule(vec![vec![zi(2)]]).unwrap();
        assert_eq!(elems(&m, &s), [0, 2, 4]);
        assert!(m.submodule(vec![]).unwrap().is_zero());
        assert!(m.submodule(vec![vec![zi(1)]]).unwrap().is_whole());
        assert!(matches!(m.submodule(vec![vec![zi(1), zi(2)]]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn quotient_examples() {
        let m = z_mod(6);
        let s = m.submodule(vec![vec![zi(2)]]).unwrap();
        assert!(m.quotient(&s).unwrap().is_isomorphic(&z_mod(2)).unwrap());
        assert!(m.quotient(&m.zero_submodule()).unwrap().is_isomorphic(&m).unwrap());
        assert!(m.quotient(&m.whole()).unwrap().is_zero_module());
        assert_eq!(z_mod(4).quotient(&s), Err(Error::AmbientMismatch));
    }

    #[test]
    fn scalar_and_colon_examples() {
        let z = RingContext::integers();
        let m = z_mod(6);
        let i = |n| Ideal::principal(&z, &zi(n)).unwrap();
        assert_eq!(elems(&m, &m.scalar_submodule(&i(3)).unwrap()), [0, 3]);
        assert!(m.scalar_submodule(&i(6)).unwrap().is_zero());
        assert!(m.scalar_submodule(&i(1)).unwrap().is_whole());
        assert_eq!(elems(&m, &m.annihilator_of(&i(3)).unwrap()), [0, 2, 4]);
        assert!(m.annihilator_of(&i(1)).unwrap().is_zero());
        let m4 = z_mod(4);
        assert_eq!(elems(&m4, &m4.annihilator_of(&i(2)).unwrap()), [0, 2]);
        assert!(m.annihilator_of(&i(0)).unwrap().is_whole());
    }

    #[test]
    fn annihilator_ideal_examples() {
        let z = RingContext::integers();
        assert_eq!(z_mod(6).direct_sum(&z_mod(4)).unwrap().annihilator_ideal().generator(), &zi(12));
        assert_eq!(PresentedModule::free(&z, 1).annihilator_ideal().generator(), &zi(0));
        assert!(PresentedModule::zero(&z).annihilator_ideal().is_unit());
    }

    #[test]
    fn relate_examples() {
        let m = z_mod(6);
        let a = m.submodule(vec![vec![zi(2)]]).unwrap();
        let b = m.submodule(vec![vec![zi(4)], vec![zi(2)]]).unwrap();
        let c = m.submodule(vec![vec![zi(3)]]).unwrap();
        assert_eq!(a.relate(&m.zero_submodule()).unwrap(), Relation::Contains);
        assert_eq!(a.relate(&b).unwrap(), Relation::Equal);
        assert_eq!(a.relate(&c).unwrap(), Relation::Incomparable);
    }

    #[test]
    fn direct_sum_examples() {
        let z = RingContext::integers();
        let s = PresentedModule::free(&z, 1).direct_sum(&z_mod(4)).unwrap();
        assert_eq!(s.free_rank(), 1);
        assert_eq!(s.invariant_factors().torsion_factors, vec![zi(4)]);
        assert!(z_mod(6).direct_sum(&PresentedModule::zero(&z)).unwrap().is_isomorphic(&z_mod(6)).unwrap());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(z_mod(6).enumerate_elements(64).unwrap().len(), 6);
        let f2 = RingContext::polynomials(2);
        let m = PresentedModule::cyclic(&f2, &f2.base().poly(&[0, 0, 1])).unwrap();
        let els: Vec<String> = m.enumerate_elements(64).unwrap().iter().map(|v| v[0].to_string()).collect();
        assert_eq!(els, ["0", "1", "x", "x + 1"]);
        assert_eq!(
            PresentedModule::free(&RingContext::integers(), 1).enumerate_elements(64),
            Err(Error::InfiniteModule)
        );
        assert_eq!(z_mod(100).enumerate_elements(64), Err(Error::SizeBoundExceeded { bound: 64 }));
    }

    #[test]
    fn quotient_context_adds_modulus_relations() {
        let z6 = RingContext::integers_mod(6);
        let r = PresentedModule::ring_module(&z6);
        assert_eq!(r.invariant_factors().torsion_factors, vec![zi(6)]);
        assert_eq!(r.enumerate_elements(64).unwrap().len(), 6);
    }

    #[test]
    fn submodule_as_module() {
        let m = z_mod(12);
        let s = m.submodule(vec![vec![zi(8)]]).unwrap();
        assert!(s.as_module().is_isomorphic(&z_mod(3)).unwrap());
        let z = RingContext::integers();
        let free = PresentedModule::free(&z, 2);
        let s = free.submodule(vec![vec![zi(2), zi(0)], vec![zi(4), zi(0)]]).unwrap();
        let sm = s.as_module();
        assert_eq!(sm.free_rank(), 1);
        assert!(sm.invariant_factors().torsion_factors.is_empty());
    }

    #[test]
    fn intersection_of_submodules() {
        let m = z_mod(12);
        let a = m.submodule(vec![vec![zi(2)]]).unwrap();
        let b = m.submodule(vec![vec![zi(3)]]).unwrap();
        let c = a.intersection(&b).unwrap();
        assert_eq!(elems(&m, &c), [0, 6]);
    }
}

use proptest::prelude::*;

use locprime::oracle::{self, Agreement, FiniteModule, InverseLimit, ModuleShape, Query};
use locprime::{
    gamma, lambda, smith_normal_form, BaseRing, Element, GlobalKind, Ideal, LocalKind, Matrix, PresentedModule,
    RingContext,
};

fn contexts() -> Vec<RingContext> {
    vec![
        RingContext::integers(),
        RingContext::integers_mod(12),
        RingContext::integers_mod(8),
        RingContext::integers_mod(30),
        RingContext::polynomials(2),
        RingContext::polynomials(3),
        RingContext::polynomials_mod(2, &[0, 1, 1, 1]),
        RingContext::polynomials_mod(3, &[0, 0, 1]),
    ]
}

fn element(ring: BaseRing, raw: &[i64]) -> Element {
    match ring {
        BaseRing::Integers => Element::int(raw[0]),
        _ => ring.poly(raw),
    }
}

fn raw_element() -> impl Strategy<Value = Vec<i64>> {
    prop_oneof![prop::collection::vec(-12i64..=12, 1..=1), prop::collection::vec(0i64..3, 1..=3),]
}

/// A module over one of the fixed contexts, from a small relation matrix.
fn module() -> impl Strategy<Value = PresentedModule> {
    (0..contexts().len(), 1usize..=3).prop_flat_map(|(c, g)| {
        prop::collection::vec(prop::collection::vec(raw_element(), g), 0..=g + 1).prop_map(move |rows| {
            let ctx = &contexts()[c];
            let ring = ctx.base();
            let rows =
                rows.into_iter().map(|row| row.iter().map(|e| ctx.reduce(&element(ring, e))).collect()).collect();
            PresentedModule::from_rows(ctx, g, rows).unwrap()
        })
    })
}

fn ideal_of(m: &PresentedModule, raw: &[i64]) -> Ideal {
    let ctx = m.context();
    Ideal::principal(ctx, &ctx.reduce(&element(ctx.base(), raw))).unwrap()
}

fn agree(q: Query, bound: usize) -> Result<bool, TestCaseError> {
    match oracle::cross_check(&q, bound).unwrap() {
        Agreement::Agree => Ok(true),
        Agreement::Skipped => Ok(false),
        Agreement::Disagree { fast, oracle } => {
            Err(TestCaseError::fail(format!("{}: fast {fast:?} vs oracle {oracle:?}", q.target_name())))
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn order_is_product_of_factors(m in module()) {
        if let Some(n) = m.order() {
            let inv = m.invariant_factors();
            let prod: u128 = inv.torsion_factors.iter().map(|d| m.ring().residue_count(d).unwrap()).product();
            prop_assert_eq!(n, prod);
            if n <= 256 {
                prop_assert_eq!(m.enumerate_elements(256).unwrap().len() as u128, n);
            }
        }
    }

    #[test]
    fn presentation_changes_keep_the_isomorphism_class(m in module(), seed in prop::collection::vec(-3i64..=3, 9)) {
        // Changing generators by a unimodular matrix gives an isomorphic module.
        let g = m.generator_count();
        let ring = m.ring();
        let mut v = Matrix::identity(ring, g);
        for i in 0..g {
            for j in (i + 1)..g {
                v[(i, j)] = ring.from_int(seed[i * 3 + j]);
            }
        }
        let rel = m.relations().mul(&v).unwrap();
        let n = PresentedModule::present(m.context(), g, rel).unwrap();
        prop_assert!(m.is_isomorphic(&n).unwrap());
        prop_assert_eq!(m.invariant_factors(), n.invariant_factors());
    }

    #[test]
    fn invariant_factors_match_smith_of_relations(m in module()) {
        let s = smith_normal_form(m.relations());
        let inv = m.invariant_factors();
        prop_assert!(s.rank() <= m.generator_count());
        if !m.context().is_quotient() {
            let nonunit: Vec<Element> = s.diagonal().into_iter().filter(|d| !m.ring().is_unit(d)).collect();
            prop_assert_eq!(&inv.torsion_factors, &nonunit);
            prop_assert_eq!(inv.free_rank, m.generator_count() - s.rank());
        }
    }

    #[test]
    fn submodule_arithmetic_matches_elements(m in module(), a in raw_element()) {
        let Ok(all) = m.enumerate_elements(64) else { return Ok(()) };
        let i = ideal_of(&m, &a);
        let g = i.generator();
        let ann = m.annihilator_of(&i).unwrap();
        let im = m.scalar_submodule(&i).unwrap();
        for v in &all {
            prop_assert_eq!(ann.contains(v), m.is_zero_element(&m.scale(g, v)));
        }
        let multiples: Vec<Vec<Element>> = all.iter().map(|v| m.scale(g, v)).collect();
        for v in &all {
            prop_assert_eq!(im.contains(v), multiples.contains(v));
        }
        let q = m.quotient(&im).unwrap();
        let sub_order = all.iter().filter(|v| im.contains(v)).count() as u128;
        prop_assert_eq!(q.order().unwrap() * sub_order, all.len() as u128);
    }

    #[test]
    fn gamma_and_lambda_match_enumeration(m in module(), a in raw_element()) {
        let Ok(fm) = FiniteModule::build(&m, 64) else { return Ok(()) };
        let i = ideal_of(&m, &a);
        let g = gamma(&m, &i).unwrap();
        let tors = oracle::torsion(&fm, i.generator());
        for (k, v) in fm.elements().iter().enumerate() {
            prop_assert_eq!(g.contains(v), tors.contains(&k));
        }
        let l = lambda(&m, &i).unwrap().expect("finite modules are complete-representable");
        let lim = InverseLimit::build(&fm, i.generator());
        prop_assert_eq!(ModuleShape::of_module(&l, 4096).unwrap(), lim.shape(&fm));
    }

    #[test]
    fn fast_paths_agree_with_the_oracle(m in module(), n in module(), a in raw_element(), b in raw_element()) {
        let i = ideal_of(&m, &a);
        let j = ideal_of(&m, &b);
        agree(Query::Annihilator { module: m.clone(), ideal: i.clone() }, 64)?;
        agree(Query::ScalarSubmodule { module: m.clone(), ideal: i.clone() }, 64)?;
        agree(Query::Gamma { module: m.clone(), ideal: i.clone() }, 64)?;
        agree(Query::Lambda { module: m.clone(), ideal: i.clone() }, 64)?;
        for kind in LocalKind::ALL {
            let j = kind.needs_two_ideals().then(|| j.clone());
            agree(Query::LocalPredicate { module: m.clone(), kind, i: i.clone(), j }, 64)?;
        }
        for kind in GlobalKind::ALL {
            agree(Query::GlobalPredicate { module: m.clone(), kind }, 64)?;
        }
        if n.context() == m.context() {
            agree(Query::Hom { source: m.clone(), target: n.clone() }, 36)?;
            agree(Query::Tensor { left: m.clone(), right: n.clone() }, 36)?;
        }
    }
}

#[test]
fn finite_modules_are_never_skipped_within_bounds() {
    let ctx = RingContext::integers();
    let m = PresentedModule::from_factors(&ctx, &[Element::int(2), Element::int(4)]).unwrap();
    let i = Ideal::principal(&ctx, &Element::int(2)).unwrap();
    for kind in [LocalKind::IPrime, LocalKind::ICoprime, LocalKind::IComplete] {
        let q = Query::LocalPredicate { module: m.clone(), kind, i: i.clone(), j: None };
        assert_eq!(oracle::cross_check(&q, 64).unwrap(), Agreement::Agree);
    }
    let q = Query::Hom { source: m.clone(), target: m.clone() };
    assert_eq!(oracle::cross_check(&q, 36).unwrap(), Agreement::Agree);
}

//! Locally prime and locally coprime modules over Euclidean domains.
//!
//! The crate models finitely presented modules over `Z`, `Z/n`, `F_p[x]` and
//! `F_p[x]/(f)`, implements the torsion functor `Γ_I`, the `I`-adic
//! completion `Λ_I`, `Hom`, `⊗` and localization on them, and decides the
//! local predicates (`I`-prime, `(I,J)`-prime, `I`-reduced and their coprime
//! duals) as well as the global ones (prime, weakly prime, reduced, coprime,
//! weakly coprime, coreduced).
//!
//! Every fast path has an element-enumerating counterpart in [`oracle`], and
//! [`harness`] runs seeded campaigns checking the implication charts,
//! closure properties, the Hom/tensor transfer laws and the torsion/completion
//! adjunction and equivalence.
//!
//! ```
//! use locprime::{Element, Ideal, LocalKind, PresentedModule, RingContext};
//!
//! let z6 = RingContext::integers_mod(6);
//! let m = PresentedModule::cyclic(&z6, &Element::int(6)).unwrap();
//! let i = Ideal::principal(&z6, &Element::int(3)).unwrap();
//! assert!(locprime::local_predicate(&m, LocalKind::IReduced, &i, None).unwrap().holds);
//! assert!(!locprime::local_predicate(&m, LocalKind::IPrime, &i, None).unwrap().holds);
//! ```

pub mod description;
pub mod error;
pub mod fpmodule;
pub mod functors;
pub mod harness;
pub mod linalg;
pub mod oracle;
pub mod primality;
pub mod ring;

pub use error::{Error, Result};
pub use fpmodule::{InvariantFactors, PresentedModule, Submodule};
pub use functors::{
    gamma, hom_module, lambda, localize, localize_ideal, tensor_module, LocalIdeal, LocalizedModule, NotRepresentable,
};
pub use linalg::{
    hermite_form, hermite_form_and_kernel, kernel, smith_normal_form, solve_membership, Matrix, SmithDecomposition,
};
pub use primality::{
    global_predicate, local_predicate, predicate_on_localization, GlobalKind, LocalKind, Verdict, Witness,
};
pub use ring::{BaseKind, BaseRing, Element, Ideal, RingContext};

/// Outcome of comparing two ideals or two submodules by inclusion.
///
/// `Contains` means the first operand contains the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    Contains,
    ContainedIn,
    Incomparable,
}

impl Relation {
    pub(crate) fn from_inclusions(first_contains_second: bool, second_contains_first: bool) -> Self {
        match (first_contains_second, second_contains_first) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::Contains,
            (false, true) => Relation::ContainedIn,
            (false, false) => Relation::Incomparable,
        }
    }
}

// The guide under book/ is compiled as doctests so its snippets cannot rot.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/functors.md")]
    mod functors {}
    #[doc = include_str!("../../../book/src/predicates.md")]
    mod predicates {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/campaigns.md")]
    mod campaigns {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

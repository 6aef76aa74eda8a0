//! Exact local invariants of Schubert varieties at torus-fixed points.
//!
//! The crate builds finite root systems and Weyl groups, computes the
//! restrictions of equivariant Chow and K-theory Schubert classes to fixed
//! points, and at cominuscule points turns them into multiplicities and
//! Hilbert series. All arithmetic is exact.
//!
//! ```
//! use schubloc::{multiplicity, Variant, WeylGroup};
//!
//! let g = WeylGroup::from_label("A5").unwrap();
//! let w = g.from_one_line(&[3, 4, 1, 6, 2, 5]).unwrap();
//! let x = g.from_one_line(&[5, 6, 3, 4, 1, 2]).unwrap();
//! assert_eq!(multiplicity(&w, &x, Variant::Opposite).unwrap(), 3.into());
//! ```

pub mod error;
pub mod evalmap;
pub mod linsolve;
pub mod localize;
pub mod poly;
pub mod rootsys;
pub mod schub;
pub mod weyl;

pub use error::{Error, ErrorKind, Result};
pub use evalmap::{
    ev_chow, ev_k, fast_path_321, hilbert_series, hilbert_series_with, local_multiplicity, multiplicity,
    multiplicity_with, EvalOptions, LocalMultiplicity, MultiplicityReport, MultiplicitySource, FastPath, HilbertPolynomial, HilbertSeries, PerturbedValue,
};
pub use localize::{
    billey_restriction, enumerate_subexpressions, gw_restriction, root_sequence, RootSequence,
    Subexpression, SubexpressionMode,
};
pub use poly::{ChowClass, KClass, LaurentPoly, QPoly};
pub use rootsys::{CartanDatum, CartanLabel, Covector, Root, RootId, RootSystem};
pub use schub::{
    comin_certificate, curve_weights, down_up_sets, is_cominuscule_element, max_parabolic, slice_dimension,
    zariski_weights_type_a, CominCertificate, DownUpSets, Exactness, InfeasibilityWitness, Variant,
};
pub use weyl::{ParabolicSubset, ReducedWordCache, Side, WeylElement, WeylGroup};

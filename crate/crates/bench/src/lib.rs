//! Fixtures shared by the kernel benchmarks.

use isotopy_core::algebra::{coset_gset, UnaryAlgebra};
use isotopy_core::construction::build_example;
use isotopy_core::group::{alternating, direct_product, subgroup_generate, symmetric};
use isotopy_core::{Bounds, ExampleBundle, FiniteGroup};

pub fn s3() -> FiniteGroup {
    symmetric(3).expect("S3")
}

pub fn s3_squared() -> FiniteGroup {
    direct_product(&s3(), &s3(), &Bounds::default()).expect("S3 x S3")
}

pub fn s3_bundle() -> ExampleBundle {
    build_example(&s3(), false, &Bounds::default()).expect("S3 construction")
}

/// A5 acting on the cosets of a subgroup of order 5 (12 points).
pub fn a5_coset_algebra() -> UnaryAlgebra {
    let a5 = alternating(5).expect("A5");
    let c5 = a5
        .elements()
        .find(|&x| a5.element_order(x) == 5)
        .expect("an element of order 5");
    let h = subgroup_generate(&a5, &[c5]).expect("cyclic subgroup");
    coset_gset(&a5, &h).expect("coset algebra")
}

/// The A5 construction; its `A` algebra has 60 points and 3600 operations.
pub fn a5_bundle() -> ExampleBundle {
    build_example(&alternating(5).expect("A5"), false, &Bounds::default()).expect("A5 construction")
}

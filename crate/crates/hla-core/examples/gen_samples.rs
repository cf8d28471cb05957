//! One-off generator for the files in `samples/`; run from the repo root.

use hla_core::algebra::builtins::{exe02, k3};
use hla_core::cocycle::{exe02_kernel_and_cocycle, CoeffSpace, Cocycle2};
use hla_core::doc::{emit_action, emit_cocycle, emit_extension, emit_morphism};
use hla_core::extensions::{adjoint_action, central_extension_from_cocycle};
use hla_core::scalar::int;
use hla_core::{GradedBasis, Matrix};

fn main() {
    let k = k3(&int(2)).unwrap();
    let e = exe02(&int(2)).unwrap();

    let (ekernel, ecocycle) = exe02_kernel_and_cocycle(&e, &int(2));
    std::fs::write("samples/exe02-cocycle.coc", emit_cocycle(&e, &ekernel, &ecocycle)).unwrap();
    std::fs::write("samples/exe02.ext", emit_extension(&e, &ekernel, &ecocycle)).unwrap();

    let ext = central_extension_from_cocycle(&e, &ekernel, &ecocycle).unwrap();
    std::fs::write(
        "samples/exe02-pi.mor",
        emit_morphism(&ext.projection, &ext.total, &e),
    )
    .unwrap();

    let empty = CoeffSpace::new(
        GradedBasis::new(vec![], vec![]).unwrap(),
        Matrix::zero(0, 0),
        Matrix::zero(0, 0),
    )
    .unwrap();
    let zero = Cocycle2::zero(&k, &empty);
    std::fs::write("samples/k3-trivial.ext", emit_extension(&k, &empty, &zero)).unwrap();

    let even_line = CoeffSpace::new(
        GradedBasis::new(vec!["u".into()], vec![]).unwrap(),
        Matrix::identity(1),
        Matrix::identity(0),
    )
    .unwrap();
    let zero = Cocycle2::zero(&k, &even_line);
    std::fs::write("samples/k3-evenline.ext", emit_extension(&k, &even_line, &zero)).unwrap();

    // Odd kernel line: the twist must rescale z exactly like beta rescales a.
    let odd_line = CoeffSpace::new(
        GradedBasis::new(vec![], vec!["z".into()]).unwrap(),
        Matrix::zero(0, 0),
        Matrix::from_rows(vec![vec![int(2)]]),
    )
    .unwrap();
    let mut w1 = vec![int(0); k.dim_even() * k.dim_odd()];
    w1[0] = int(1);
    let pairing = Cocycle2::new(&k, &odd_line, vec![], w1, vec![]).unwrap();
    std::fs::write("samples/k3-oddline.coc", emit_cocycle(&k, &odd_line, &pairing)).unwrap();
    std::fs::write("samples/k3-oddline.ext", emit_extension(&k, &odd_line, &pairing)).unwrap();

    std::fs::write("samples/k3-adjoint.act", emit_action(&k, &k, &adjoint_action(&k))).unwrap();
}

//! The shipped example inputs, available by file name without a checkout.

pub const FILES: &[(&str, &str)] = &[
    ("arrow.category", include_str!("../../corpus/arrow.category")),
    ("bad.twists", include_str!("../../corpus/bad.twists")),
    ("broken.word", include_str!("../../corpus/broken.word")),
    ("closed.surfaces", include_str!("../../corpus/closed.surfaces")),
    ("dual.algebra", include_str!("../../corpus/dual.algebra")),
    ("dual.category", include_str!("../../corpus/dual.category")),
    ("fib.algebra", include_str!("../../corpus/fib.algebra")),
    ("fib.fusion", include_str!("../../corpus/fib.fusion")),
    ("fib.surfaces", include_str!("../../corpus/fib.surfaces")),
    ("fib.twists", include_str!("../../corpus/fib.twists")),
    ("fib_x_z2.fusion", include_str!("../../corpus/fib_x_z2.fusion")),
    ("frobenius.word", include_str!("../../corpus/frobenius.word")),
    ("genus2.word", include_str!("../../corpus/genus2.word")),
    ("genus2_cups.word", include_str!("../../corpus/genus2_cups.word")),
    ("k.algebra", include_str!("../../corpus/k.algebra")),
    ("k.category", include_str!("../../corpus/k.category")),
    ("k2.algebra", include_str!("../../corpus/k2.algebra")),
    ("k2.element", include_str!("../../corpus/k2.element")),
    ("m2.algebra", include_str!("../../corpus/m2.algebra")),
    ("m2.category", include_str!("../../corpus/m2.category")),
    ("m2.element", include_str!("../../corpus/m2.element")),
    ("m2_bad.idempotents", include_str!("../../corpus/m2_bad.idempotents")),
    ("m2_diag.idempotents", include_str!("../../corpus/m2_diag.idempotents")),
    ("m2_fixed.element", include_str!("../../corpus/m2_fixed.element")),
    ("m2_unnormalized.element", include_str!("../../corpus/m2_unnormalized.element")),
    ("s3.algebra", include_str!("../../corpus/s3.algebra")),
    ("s3.fusion", include_str!("../../corpus/s3.fusion")),
    ("snake.word", include_str!("../../corpus/snake.word")),
    ("sphere.word", include_str!("../../corpus/sphere.word")),
    ("torus.word", include_str!("../../corpus/torus.word")),
    ("torus_cupcap.word", include_str!("../../corpus/torus_cupcap.word")),
    ("torus_swap.word", include_str!("../../corpus/torus_swap.word")),
    ("trivial.fusion", include_str!("../../corpus/trivial.fusion")),
    ("z2.algebra", include_str!("../../corpus/z2.algebra")),
    ("z2.element", include_str!("../../corpus/z2.element")),
    ("z2.fusion", include_str!("../../corpus/z2.fusion")),
    ("z3.algebra", include_str!("../../corpus/z3.algebra")),
    ("z3.fusion", include_str!("../../corpus/z3.fusion")),
];

pub fn lookup(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

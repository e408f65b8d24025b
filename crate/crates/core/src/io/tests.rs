use proptest::prelude::*;

use super::*;
use crate::exact::{q, Tensor3};
use crate::lincat::{mat_completion, tensor_product, Algebra};
use crate::modular::TwistValue;
use crate::tqft::FrobeniusAlgebra;

fn round_trip(doc: Document) {
    let text = doc.serialize();
    let back = parse(doc.kind(), &text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(back, doc);
    assert_eq!(back.serialize(), text);
}

#[test]
fn fibonacci_text() {
    let text = "rank 2\nlabel 0 0\nlabel 1 tau\nunit 0\nN 0 0 0 1\nN 0 1 1 1\nN 1 0 1 1\nN 1 1 0 1\nN 1 1 1 1\n";
    let ring = parse_fusion(text).unwrap();
    assert_eq!(ring, FusionRing::fibonacci());
    assert_eq!(Document::Fusion(ring).serialize(), text);
}

#[test]
fn fusion_defaults_and_comments() {
    let text = "# Z/3\nrank 3   # three labels\n\ndual 1 2\nunit 0\nN 0 0 0 1\nN 0 1 1 1\nN 0 2 2 1\nN 1 0 1 1\nN 1 1 2 1\nN 1 2 0 1\nN 2 0 2 1\nN 2 1 0 1\nN 2 2 1 1\n";
    assert_eq!(parse_fusion(text).unwrap(), FusionRing::cyclic(3));
}

#[test]
fn fusion_errors() {
    let err = |t: &str| parse_fusion(t).unwrap_err();
    assert_eq!(err(""), ParseError::at_line(1, "missing rank"));
    assert_eq!(err("# nothing\n\n").message, "missing rank");
    let e = err("rank 1\nunit 0\nN 0 0 0 -1\n");
    assert_eq!((e.line, e.column, e.message.as_str()), (3, 9, "negative coefficient"));
    let e = err("rank 3\ndual 1 2\ndual 2 2\nunit 0\n");
    assert_eq!((e.line, e.column, e.message.as_str()), (3, 6, "duplicate dual entry for 2"));
    let e = err("rank 2\nunit 0\nfuse 0 1\n");
    assert_eq!((e.line, e.column, e.message.as_str()), (3, 1, "unknown directive 'fuse'"));
    let e = err("rank 2\nN 0 0 0 1\n");
    assert_eq!((e.line, e.message.as_str()), (3, "missing unit"));
    let e = err("rank 2\nunit 0\nN 0 2 0 1\n");
    assert_eq!((e.line, e.column), (3, 5));
    let e = err("label 0 a\nrank 1\n");
    assert_eq!(e.message, "missing rank");
    let e = err("rank 2\nunit 0\nN 0 0 0 1\nN 0 0 0 1\n");
    assert_eq!(e.line, 4);
}

#[test]
fn rings_round_trip() {
    for r in [
        FusionRing::trivial(),
        FusionRing::cyclic(3),
        FusionRing::fibonacci().direct_product(&FusionRing::cyclic(2)),
    ] {
        round_trip(Document::Fusion(r));
    }
}

#[test]
fn algebras_round_trip() {
    round_trip(Document::Algebra(AlgebraData::from_frobenius(&FrobeniusAlgebra::cyclic_group(3))));
    round_trip(Document::Algebra(AlgebraData::from_algebra(&Algebra::matrices(2))));
    let zero_counit = FrobeniusAlgebra::diagonal(vec![q(0, 1), q(0, 1)]);
    round_trip(Document::Algebra(AlgebraData::from_frobenius(&zero_counit)));
}

#[test]
fn algebra_text() {
    let text = "dim 2\nbasis 0 1\nbasis 1 x\nmult 0 0 0 1\nmult 0 1 1 1\nmult 1 0 1 1\nunit 0 1\ncounit 1 1\n";
    let a = parse_algebra(text).unwrap();
    assert_eq!(a.algebra().unwrap(), Algebra::dual_numbers());
    assert_eq!(a.frobenius().unwrap().counit(), &[q(0, 1), q(1, 1)]);
    let e = parse_algebra("dim 2\nmult 0 0 0 1/0\nunit 0 1\n").unwrap_err();
    assert_eq!((e.line, e.column), (2, 12));
    assert_eq!(parse_algebra("dim 1\n").unwrap_err().message, "missing unit");
}

#[test]
fn categories_round_trip() {
    let k = crate::lincat::PresentedCategory::ground();
    let (m, _) = mat_completion(&k, 2).unwrap();
    round_trip(Document::Category(m.clone()));
    round_trip(Document::Category(tensor_product(&m, &Algebra::dual_numbers().to_category())));
    let kc = crate::lincat::karoubi_completion(&m, &crate::lincat::default_grid()).unwrap();
    round_trip(Document::Category(kc.category));
}

#[test]
fn category_text_and_errors() {
    let text = "object p\nhom p p 1p\nhom p p x\ncompose 1p 1p = 1*1p\ncompose 1p x = x\ncompose x 1p = 1*x\ncompose x x = 0\nidentity p = 1p\n";
    let c = parse_category(text).unwrap();
    assert_eq!(
        Algebra::from_category(&c).unwrap().structure_constants(),
        Algebra::dual_numbers().structure_constants()
    );
    let e = parse_category("object p\nhom p q f\n").unwrap_err();
    assert_eq!((e.line, e.column), (2, 7));
    let e = parse_category("object p\nobject q\nhom p q f\nhom q q g\ncompose f g = f\n").unwrap_err();
    assert_eq!(e.message, "cannot compose 'f' after 'g'");
    let e = parse_category("object p\nhom p p f\ncompose f f = 2*f +\n").unwrap_err();
    assert_eq!(e.message, "expression ends with '+'");
    let e = parse_category("object p\nhom p p f\ncompose f f = f\n").unwrap_err();
    assert_eq!((e.line, e.message.as_str()), (1, "no identity given for object 'p'"));
}

#[test]
fn surfaces_twists_words_elements() {
    let text = "surface torus: genus 1 boundary\nsurface pants: genus 0 boundary tau tau 0\n";
    let doc = parse(Kind::Surfaces, text).unwrap();
    assert_eq!(doc.serialize(), text);
    let Document::Surfaces(specs) = doc else { unreachable!() };
    let fib = FusionRing::fibonacci();
    assert_eq!(specs[1].resolve(&fib).unwrap().surface.boundary, vec![1, 1, 0]);
    assert!(specs[1].resolve(&FusionRing::trivial()).is_err());
    let e = parse(Kind::Surfaces, "surface a genus 1 boundary\n").unwrap_err();
    assert_eq!(e.column, 9);

    let text = "twist 0 = 1\ntwist tau = zeta(5,2)\ntwist x = 3/2\n";
    let doc = parse(Kind::Twists, text).unwrap();
    assert_eq!(doc.serialize(), text);
    let e = parse(Kind::Twists, "twist a = zeta(0,1)\n").unwrap_err();
    assert_eq!(e.message, "root of unity needs a positive order");
    let Document::Twists(t) = parse(Kind::Twists, "twist a = -1\ntwist b = zeta(10,5)\n").unwrap() else {
        unreachable!()
    };
    assert_eq!(t[0].value, t[1].value);
    assert_eq!(t[0].value, TwistValue::root_of_unity(2, 1).unwrap());

    let w = parse_word("unit\ncomult\nmult\ncounit\n").unwrap();
    assert_eq!(w, crate::tqft::canonical_word(1));
    let e = parse_word("unit\nhandle\n").unwrap_err();
    assert_eq!((e.line, e.column, e.message.as_str()), (2, 1, "unknown generator 'handle'"));
    assert_eq!(parse_word("").unwrap_err().message, "empty word");

    let text = "term 0 0 1/2\nterm 1 1 1/2\n";
    let doc = parse(Kind::Element, text).unwrap();
    assert_eq!(doc.serialize(), text);

    let text = "idempotent [x,x] = 1*[x,x]>[x,x]:1@0,0\n";
    let Document::Idempotents(specs) = parse(Kind::Idempotents, text).unwrap() else { unreachable!() };
    let (m, _) = mat_completion(&crate::lincat::PresentedCategory::ground(), 2).unwrap();
    assert_eq!(specs[0].resolve(&m).unwrap(), (1, vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1)]));
    assert_eq!(Document::Idempotents(specs).serialize(), text);
}

#[test]
fn kinds_from_paths() {
    assert_eq!(Kind::from_path(Path::new("a/fib.fusion")), Some(Kind::Fusion));
    assert_eq!(Kind::from_path(Path::new("torus.word")), Some(Kind::Word));
    assert_eq!(Kind::from_path(Path::new("README")), None);
}

proptest! {
    #[test]
    fn random_tables_round_trip(
        rank in 1usize..4,
        entries in proptest::collection::vec(0u32..4, 64),
        dual_swap in any::<bool>(),
    ) {
        let coeffs = Tensor3::from_fn((rank, rank, rank), |a, b, c| entries[(a * rank + b) * rank + c]);
        let mut dual: Vec<usize> = (0..rank).collect();
        if dual_swap && rank >= 3 {
            dual.swap(1, 2);
        }
        let names = (0..rank).map(|i| format!("L{i}")).collect();
        let ring = FusionRing::new(names, dual, vec![0], coeffs).unwrap();
        let text = Document::Fusion(ring.clone()).serialize();
        prop_assert_eq!(parse_fusion(&text).unwrap(), ring);
    }

    #[test]
    fn random_algebra_tables_round_trip(
        nums in proptest::collection::vec(-5i64..6, 27),
        dens in proptest::collection::vec(1i64..5, 27),
    ) {
        let mult = Tensor3::from_fn((3, 3, 3), |i, j, k| q(nums[i * 9 + j * 3 + k], dens[i * 9 + j * 3 + k]));
        let data = AlgebraData {
            names: vec!["a".into(), "b".into(), "c".into()],
            mult,
            unit: vec![q(1, 2), q(0, 1), q(-3, 1)],
            counit: Some(vec![q(0, 1), q(7, 3), q(0, 1)]),
        };
        let text = Document::Algebra(data.clone()).serialize();
        prop_assert_eq!(parse_algebra(&text).unwrap(), data);
    }
}

use std::cmp::Ordering;

use lampext::base::{geodesic_segment, steiner_hull};
use lampext::{BaseElement, BaseGroup, FreeWord, Letter};
use proptest::prelude::*;

fn f2(text: &str) -> BaseElement {
    BaseGroup::Free(2).parse_element(text).unwrap()
}

fn free_word(rank: usize) -> impl Strategy<Value = BaseElement> {
    prop::collection::vec(0..2 * rank, 0..10).prop_map(move |idx| {
        let letters = Letter::all(rank);
        BaseElement::Word(FreeWord::from_letters(idx.into_iter().map(|i| letters[i])))
    })
}

fn lattice_vec() -> impl Strategy<Value = BaseElement> {
    prop::collection::vec(-6i64..6, 3).prop_map(BaseElement::Vector)
}

proptest! {
    #[test]
    fn free_group_axioms(x in free_word(2), y in free_word(2), z in free_word(2)) {
        let h = BaseGroup::Free(2);
        let xy_z = h.multiply(&h.multiply(&x, &y).unwrap(), &z).unwrap();
        let x_yz = h.multiply(&x, &h.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert_eq!(h.multiply(&x, &h.identity()).unwrap(), x.clone());
        prop_assert!(h.is_identity(&h.multiply(&x, &h.inverse(&x).unwrap()).unwrap()));
    }

    #[test]
    fn lattice_axioms(x in lattice_vec(), y in lattice_vec(), z in lattice_vec()) {
        let h = BaseGroup::Lattice(3);
        let xy_z = h.multiply(&h.multiply(&x, &y).unwrap(), &z).unwrap();
        let x_yz = h.multiply(&x, &h.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert!(h.is_identity(&h.multiply(&x, &h.inverse(&x).unwrap()).unwrap()));
    }

    #[test]
    fn reduction_is_idempotent(x in free_word(3)) {
        let w = x.as_word().unwrap();
        prop_assert_eq!(FreeWord::from_letters(w.letters().iter().copied()), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| p[0] != p[1].inverse()));
    }

    #[test]
    fn shortlex_is_a_total_order(x in free_word(2), y in free_word(2), z in free_word(2)) {
        let h = BaseGroup::Free(2);
        let xy = h.compare(&x, &y).unwrap();
        prop_assert_eq!(xy == Ordering::Equal, x == y);
        prop_assert_eq!(h.compare(&y, &x).unwrap(), xy.reverse());
        if xy == Ordering::Less && h.compare(&y, &z).unwrap() == Ordering::Less {
            prop_assert_eq!(h.compare(&x, &z).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn integer_order_is_translation_invariant(x in -50i64..50, y in -50i64..50, k in -50i64..50) {
        let h = BaseGroup::Integers;
        let (a, b) = (BaseElement::Int(x), BaseElement::Int(y));
        let (ka, kb) = (BaseElement::Int(x + k), BaseElement::Int(y + k));
        prop_assert_eq!(h.compare(&a, &b).unwrap(), h.compare(&ka, &kb).unwrap());
    }

    #[test]
    fn hull_is_monotone(xs in prop::collection::vec(free_word(2), 0..5), p in free_word(2)) {
        let before = steiner_hull(&xs).unwrap();
        let mut more = xs.clone();
        more.push(p);
        let after = steiner_hull(&more).unwrap();
        prop_assert!(after.vertex_count() >= before.vertex_count());
        prop_assert!(before.vertices().iter().all(|v| after.contains(v)));
        if after.vertex_count() > 0 {
            prop_assert_eq!(after.edge_count(), after.vertex_count() - 1);
        }
    }

    #[test]
    fn text_round_trip(x in free_word(2)) {
        let h = BaseGroup::Free(2);
        prop_assert_eq!(h.parse_element(&h.format_element(&x)).unwrap(), x);
    }
}

#[test]
fn multiply_examples() {
    let z = BaseGroup::Integers;
    assert_eq!(z.multiply(&BaseElement::Int(3), &BaseElement::Int(-3)).unwrap(), BaseElement::Int(0));
    let h = BaseGroup::Free(2);
    assert_eq!(h.multiply(&f2("sT"), &f2("tS")).unwrap(), f2("e"));
    assert_eq!(h.multiply(&f2("st"), &f2("ts")).unwrap(), f2("stts"));
    assert!(h.multiply(&f2("s"), &BaseElement::Int(1)).is_err());
}

#[test]
fn compare_examples() {
    let z = BaseGroup::Integers;
    assert_eq!(z.compare(&BaseElement::Int(-2), &BaseElement::Int(5)).unwrap(), Ordering::Less);
    let h = BaseGroup::Free(2);
    assert_eq!(h.compare(&f2("t"), &f2("st")).unwrap(), Ordering::Less);
    assert_eq!(h.compare(&f2("st"), &f2("ss")).unwrap(), Ordering::Greater);
    assert!(h.compare(&f2("s"), &BaseElement::Int(0)).is_err());
}

#[test]
fn hull_examples() {
    let hull = steiner_hull(&[f2("e")]).unwrap();
    assert_eq!(hull.vertex_count(), 1);
    assert_eq!(hull.edge_count(), 0);
    let hull = steiner_hull(&[f2("s"), f2("t")]).unwrap();
    assert_eq!(hull.vertex_count(), 3);
    assert_eq!(hull.edge_count(), 2);
    let hull = steiner_hull(&[f2("ss"), f2("st")]).unwrap();
    assert!(hull.contains(f2("s").as_word().unwrap()));
    assert_eq!(hull.edge_count(), 2);
    assert_eq!(steiner_hull(&[]).unwrap().vertex_count(), 0);
    assert!(steiner_hull(&[BaseElement::Int(1)]).is_err());
}

#[test]
fn segment_examples() {
    assert_eq!(geodesic_segment(&f2("e"), &f2("e")).unwrap(), vec![f2("e")]);
    assert_eq!(geodesic_segment(&f2("s"), &f2("t")).unwrap(), vec![f2("s"), f2("e"), f2("t")]);
    assert_eq!(geodesic_segment(&f2("ss"), &f2("st")).unwrap(), vec![f2("ss"), f2("s"), f2("st")]);
}

#[test]
fn ball_examples() {
    assert_eq!(BaseGroup::Integers.enumerate_ball(0).unwrap(), vec![BaseElement::Int(0)]);
    assert_eq!(BaseGroup::Integers.enumerate_ball(2).unwrap().len(), 5);
    let ball = BaseGroup::Free(2).enumerate_ball(2).unwrap();
    assert_eq!(ball.len(), 17);
    assert!(ball.windows(2).all(|p| p[0] < p[1]));
    assert_eq!(BaseGroup::Lattice(2).enumerate_ball(1).unwrap().len(), 5);
    assert!(BaseGroup::Free(2).enumerate_ball(100).is_err());
}

#[test]
fn free_ball_sizes() {
    for n in 0..=5usize {
        let expected = 1 + 4 * (3usize.pow(n as u32) - 1) / 2;
        assert_eq!(BaseGroup::Free(2).enumerate_ball(n).unwrap().len(), expected);
    }
}

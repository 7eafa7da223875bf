use super::*;
use crate::coxeter::{CoxeterType, ElementTable};
use crate::field::{PrimeField, Rationals};

fn desc(ty: CoxeterType) -> DescentAlgebra {
    DescentAlgebra::new(&ElementTable::build(ty).unwrap()).unwrap()
}

fn p(v: u64) -> Characteristic {
    Characteristic::new(v).unwrap()
}

#[test]
fn b2_char2_local_algebra() {
    let a = desc(CoxeterType::b(2));
    let mut r = RepresentationData::compute(&a, PrimeField::new(2).unwrap()).unwrap();
    assert_eq!(r.simples().len(), 1);
    assert_eq!(r.cartan(), &[vec![4]]);
    assert_eq!(r.quiver().loop_count(), 2);
    assert_eq!(r.loewy_layers(), vec![1, 2, 1]);
}

#[test]
fn semisimple_when_p_coprime_to_order_in_small_rank() {
    // For p not dividing |W| the Cartan matrix is still unitriangular.
    let a = desc(CoxeterType::b(3));
    let r = RepresentationData::compute(&a, Rationals).unwrap();
    let c = r.cartan();
    for i in 0..c.len() {
        assert_eq!(c[i][i], 1);
    }
    let total: u64 = c.iter().flatten().sum();
    assert_eq!(total, a.dim() as u64);
}

#[test]
fn cartan_entries_sum_to_dimension() {
    for (ty, q) in [(CoxeterType::b(4), 3), (CoxeterType::d(4), 2), (CoxeterType::h(3), 5), (CoxeterType::dihedral(6), 3)] {
        let a = desc(ty);
        let s = summarize(&a, p(q)).unwrap();
        assert_eq!(s.cartan.iter().flatten().sum::<u64>(), a.dim() as u64, "{ty}");
        assert_eq!(s.radical_dim, a.dim() - s.simples.len());
    }
}

#[test]
fn reduction_of_cartan_matrix() {
    for (ty, q) in [(CoxeterType::b(3), 3), (CoxeterType::b(4), 2), (CoxeterType::d(4), 3), (CoxeterType::h(3), 2)] {
        let a = desc(ty);
        let c0 = summarize(&a, Characteristic::ZERO).unwrap().cartan;
        let cp = summarize(&a, p(q)).unwrap().cartan;
        let d = decomposition_matrix(&a, p(q)).unwrap();
        assert_eq!(reduced_cartan(&c0, &d), cp, "{ty} p={q}");
    }
}

#[test]
fn char_zero_arrows_survive_reduction() {
    for (ty, primes) in [
        (CoxeterType::b(3), &[2u64, 3][..]),
        (CoxeterType::b(4), &[2, 3, 5][..]),
        (CoxeterType::d(4), &[2, 3, 5][..]),
        (CoxeterType::h(3), &[2, 3, 5][..]),
        (CoxeterType::dihedral(6), &[2, 3][..]),
    ] {
        let a = desc(ty);
        let q0 = ext_quiver(&a, Characteristic::ZERO).unwrap();
        for &q in primes {
            let qp = ext_quiver(&a, p(q)).unwrap();
            let d = decomposition_matrix(&a, p(q)).unwrap();
            assert_eq!(qp.vertex_count(), simple_modules(&a, p(q)).len());
            let image: Vec<usize> = d.iter().map(|row| row.iter().position(|&e| e == 1).unwrap()).collect();
            for (from, to, _) in q0.triples() {
                assert!(qp.arrows(image[from], image[to]) >= 1, "{ty} p={q}: {from}->{to}");
            }
        }
    }
}

//! End-to-end runs through the public API, from a seeded matrix to the
//! presentation of the symbolic Rees algebra.

use symrees::biratio::{build_inversion_data, image_ideal, kernel_presentation_from, RationalMapData};
use symrees::groebner::{krull_dimension, Budget};
use symrees::linmat::{random_general_matrix, signed_maximal_minors, MatrixSpec};
use symrees::ring::{FieldSpec, Fp, Rational};
use symrees::sympow::{symbolic_generator_table, MinorsIdeal};

fn fp() -> FieldSpec {
    FieldSpec::prime(32003).unwrap()
}

#[test]
fn minors_define_a_map_onto_a_hypersurface_free_image() {
    // m = n: the map P^2 --> P^2 is a Cremona map, so the image is everything
    let b = Budget::unlimited();
    let (l, _) = random_general_matrix::<Rational>(&MatrixSpec::new(3, 3, FieldSpec::Rationals, 2), &b).unwrap();
    let g = RationalMapData::new(signed_maximal_minors(&l).unwrap()).unwrap();
    assert!(g.gcd_free());
    assert_eq!(g.degree(), 2);
    assert!(image_ideal(&g, &b).unwrap().generators().iter().all(|p| p.is_zero()));
}

#[test]
fn m4_n3_image_is_a_hypersurface_of_degree_e() {
    let b = Budget::unlimited();
    let (l, _) = random_general_matrix::<Fp>(&MatrixSpec::new(4, 3, fp(), 8), &b).unwrap();
    let g = RationalMapData::new(signed_maximal_minors(&l).unwrap()).unwrap();
    let img = image_ideal(&g, &b).unwrap();
    let nonzero: Vec<_> = img.generators().iter().filter(|p| !p.is_zero()).collect();
    assert_eq!(nonzero.len(), 1);
    assert_eq!(krull_dimension(&img, &b).unwrap().codim, 1);
}

#[test]
fn inversion_data_feeds_the_presentation() {
    let b = Budget::unlimited();
    let (l, _) = random_general_matrix::<Fp>(&MatrixSpec::new(4, 3, fp(), 12), &b).unwrap();
    let data = build_inversion_data(&l, &b).unwrap();
    assert!(data.passed());
    let json = data.to_json();
    assert_eq!(json["degrees"]["E"], 12);
    let p = kernel_presentation_from(data, &b).unwrap();
    assert!(p.passed(), "{:?}", p.checks);
    let sizes: Vec<usize> = p.counts().into_iter().map(|(_, k)| k).collect();
    assert_eq!(sizes.iter().sum::<usize>(), 22);
}

#[test]
fn symbolic_table_for_m_equal_n_plus_one() {
    let b = Budget::unlimited();
    let (l, _) = random_general_matrix::<Fp>(&MatrixSpec::new(4, 3, fp(), 21), &b).unwrap();
    let t = symbolic_generator_table(&l, 5, &b).unwrap();
    assert_eq!(t.fresh_levels(), vec![1, 2, 5]);
    assert_eq!(t.rows[1].fresh_degrees, vec![5, 5, 5]);
    assert_eq!(t.rows[4].fresh_degrees, vec![12]);
    let i = MinorsIdeal::from_matrix(&l).unwrap();
    assert_eq!((i.m(), i.n()), (4, 3));
}

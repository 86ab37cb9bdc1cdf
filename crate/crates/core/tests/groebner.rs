use num_bigint::BigInt;
use tribone::groebner::{buchberger_z, ideal_equal};
use tribone::polynomial::{parse, MonomialOrder, Polynomial, VariableSet};

fn st(s: &str) -> Polynomial {
    parse(s, &VariableSet::st()).unwrap()
}

fn xy(s: &str) -> Polynomial {
    parse(s, &VariableSet::xy()).unwrap()
}

const THETA: &str = "t^2 - s1*s2*t + 3*t + s1^3 + s2^3 - 6*s1*s2 + 9";

const TRIPLETS: [&str; 6] = [
    "-3*s1 + 2*s2^2",
    "3*s1 - s2^2 + s1*t",
    "s1^2*s2 - s2^2 - s1*t",
    "-s1^2*s2 + 2*s2^2 - s1*t + s2^2*t",
    "-3*s1 + s1^2*s2 - s2^2",
    "3*s1 - 2*s1^2*s2 - s2^2 + s1*s2^3 + s1*t - s2^2*t",
];

const PUBLISHED: [&str; 11] = [
    "27+9*t+3*t^2",
    "-27+t^3",
    "9*s2+3*s2*t+s2*t^2",
    "3*s2^2",
    "s2^2*t",
    "s2^4",
    "3*s1+s2^2",
    "s2^2+s1*t",
    "s1*s2^3",
    "s1^2*s2",
    "9+s1^3+s2^3+3*t+t^2",
];

fn j_trib() -> Vec<Polynomial> {
    TRIPLETS.iter().chain([&THETA]).map(|s| st(s)).collect()
}

#[test]
fn tribone_basis_matches_published_list() {
    let gb = buchberger_z(&j_trib(), MonomialOrder::Lex).unwrap();
    assert!(gb.is_complete());
    assert!(gb.cofactors_are_sound());
    let leading: Vec<_> = gb
        .leading_terms()
        .into_iter()
        .map(|(m, c)| (m.exponents().to_vec(), c))
        .collect();
    assert_eq!(leading.len(), 11);
    let published: Vec<Polynomial> = PUBLISHED.iter().map(|s| st(s)).collect();
    assert!(ideal_equal(&j_trib(), &published, MonomialOrder::Lex).unwrap());
    for p in &published {
        assert!(gb.contains(p), "{p}");
    }
    // the published list is itself a strong basis: same leading-term ideal
    let pub_gb = buchberger_z(&published, MonomialOrder::Lex).unwrap();
    assert!(pub_gb.is_complete());
}

#[test]
fn multiples_of_s2_squared() {
    let gb = buchberger_z(&j_trib(), MonomialOrder::Lex).unwrap();
    for d in -7i64..=7 {
        let f = st("s2^2").scale(&BigInt::from(d));
        assert_eq!(gb.contains(&f), d % 3 == 0, "d = {d}");
    }
    assert!(!gb.contains(&st("s1")));
    assert!(gb.contains(&st("s2^2 + 3*s1")));
}

#[test]
fn checkerboard_ideal_basis() {
    let gens = vec![xy("1+x+x^2"), xy("1+y+y^2"), xy("1+x*y+x^2*y^2")];
    let gb = buchberger_z(&gens, MonomialOrder::DegLex).unwrap();
    assert!(gb.is_complete());
    assert!(gb.cofactors_are_sound());
    assert_eq!(
        gb.elements(),
        vec![xy("3*x - 3*y"), xy("1+y+y^2"), xy("x*y + 2*x - y + 1"), xy("1+x+x^2")]
    );
    assert!(gb.contains(&xy("x^3 - 1")));
    assert!(gb.contains(&xy("y^3 - 1")));
    assert!(!gb.contains(&xy("3")));
    assert!(!gb.contains(&xy("x - y")));
    assert!(gb.contains(&(xy("x^2 - y^2") * xy("1+x+x^2"))));
    assert!(!gb.contains(&xy("1")));
    assert!(!gb.contains(&xy("x - 1")));
}

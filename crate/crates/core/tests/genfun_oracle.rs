//! Every generating function against the brute-force oracle, coefficient by
//! coefficient.

use num_bigint::{BigInt, BigUint};
use rectcap_core::genfun::{closed_total, gf_a, gf_b, gf_bgeq, gf_c, gf_d, gf_dgeq, gf_total};
use rectcap_core::{
    cardinality, oracle_distribution, oracle_total, Budget, Family, FamilySpec, LaurentPoly, RectSpec,
    Restriction, XSeries,
};

struct Cell {
    label: String,
    gf: XSeries,
    spec: FamilySpec,
    k: u32,
    r: u32,
    s: u32,
}

fn check(cell: &Cell) {
    let rect = RectSpec::new(cell.r, cell.s).unwrap();
    let dt = cell.gf.dt_at_1();
    let norm = cell.gf.eval_t1();
    for n in 0..=cell.gf.order() {
        let coeff = cell.gf.coeff(n);
        let oracle = oracle_distribution(cell.spec, n, cell.k, rect, Budget::default()).unwrap();
        assert_eq!(coeff, &oracle.poly, "{} n={n}", cell.label);
        assert!(!coeff.has_negative_exponent() && !coeff.has_negative_coefficient());
        let count = BigInt::from(cardinality(cell.spec, n, cell.k).unwrap());
        assert_eq!(norm.coeff(n), &LaurentPoly::constant(count), "{} n={n}", cell.label);
        let total = oracle_total(cell.spec, n, cell.k, rect, Budget::default()).unwrap();
        assert_eq!(dt.coeff(n), &LaurentPoly::constant(BigInt::from(total)), "{} n={n}", cell.label);
    }
}

fn nd() -> FamilySpec {
    FamilySpec::nondecreasing()
}

fn sm() -> FamilySpec {
    FamilySpec::smirnov()
}

#[test]
fn nondecreasing_one_row() {
    for k in 1..=5 {
        for s in 1..=4 {
            let gf = gf_a(k, s, 9).unwrap();
            check(&Cell { label: format!("A k={k} s={s}"), gf, spec: nd(), k, r: 1, s });
        }
    }
}

#[test]
fn nondecreasing_taller() {
    for r in 2..=4 {
        for k in (r - 1)..=5 {
            for s in 1..=3 {
                let gf = gf_b(k, r, s, 9).unwrap();
                check(&Cell { label: format!("B k={k} r={r} s={s}"), gf, spec: nd(), k, r, s });
                let gf = gf_bgeq(k, r, s, 9).unwrap();
                let spec = nd().with(Restriction::MinLetter(r - 1));
                check(&Cell { label: format!("Bgeq k={k} r={r} s={s}"), gf, spec, k, r, s });
            }
        }
    }
}

#[test]
fn smirnov_one_row() {
    for k in 2..=4u32 {
        for s in 1..=4 {
            let order = (1..=10).take_while(|&n| u64::from(k - 1).pow(n) <= 1_000_000).last().unwrap() as usize;
            let gf = gf_c(k, s, order).unwrap();
            check(&Cell { label: format!("C k={k} s={s}"), gf, spec: sm(), k, r: 1, s });
        }
    }
}

#[test]
fn smirnov_taller() {
    for r in 2..=3 {
        for k in r..=4 {
            for s in 2..=3 {
                let gf = gf_d(k, r, s, 10).unwrap();
                check(&Cell { label: format!("D k={k} r={r} s={s}"), gf, spec: sm(), k, r, s });
                let gf = gf_dgeq(k, r, s, 10).unwrap();
                let spec = sm().with(Restriction::MinLetter(r - 1));
                check(&Cell { label: format!("Dgeq k={k} r={r} s={s}"), gf, spec, k, r, s });
            }
        }
    }
}

#[test]
fn totals_agree_four_ways() {
    type Grid = Vec<(u32, u32, u32)>;
    let grids: [(Family, Grid); 2] = [
        (
            Family::Nondecreasing,
            (1..=5).flat_map(|k| (1..=4).flat_map(move |r| (1..=4).map(move |s| (k, r, s)))).collect(),
        ),
        (
            Family::Smirnov,
            (2..=4)
                .flat_map(|k| (1..=3).flat_map(move |r| (1..=4).map(move |s| (k, r, s))))
                .filter(|&(_, r, s)| r == 1 || s >= 2)
                .collect(),
        ),
    ];
    for (family, cells) in grids {
        for (k, r, s) in cells {
            let series = gf_total(family, k, r, s, 9).unwrap().t_free_values().unwrap();
            for (n, v) in series.iter().enumerate() {
                let rect = RectSpec::new(r, s).unwrap();
                let oracle = oracle_total(FamilySpec::new(family, Restriction::None), n, k, rect, Budget::default());
                let oracle = BigInt::from(oracle.unwrap());
                assert_eq!(v, &oracle, "{family} k={k} r={r} s={s} n={n}");
                assert_eq!(closed_total(family, n, k, r, s).unwrap(), oracle);
            }
        }
    }
}

#[test]
fn cardinality_is_unsigned_count() {
    assert_eq!(cardinality(sm(), 0, 5).unwrap(), BigUint::from(1u8));
}

use hkrr_core::algebra::int;
use hkrr_core::chern::{chi_p_form, evaluate, integrate, ChernNumbers, GradedClass};
use hkrr_core::solver::*;
use hkrr_core::Error;

#[test]
fn rr_rows_have_rank_three() {
    let rr = assemble_rr_equations().unwrap();
    assert_eq!(rr.rows().len(), 6);
    assert_eq!(rr.rank(), 3);
    assert!(matches!(rr.solve(), Err(Error::RankDeficient { rank: 3, unknowns: 7 })));
    let deps = rr.dependencies();
    assert_eq!(deps.len(), 3);
    for w in &deps {
        for col in 0..7 {
            let s: hkrr_core::Rational = w.iter().zip(rr.rows()).map(|(a, r)| a * &r.coeffs[col]).sum();
            assert_eq!(s, int(0));
        }
    }
    for (i, w) in deps.iter().enumerate() {
        println!("dependency {i}: {:?}", w.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    }
}

#[test]
fn named_triple_is_independent() {
    // rows are y^0, y^2, …, y^10
    let rr = assemble_rr_equations().unwrap();
    assert_eq!(rr.select(&[4, 3, 1]).rank(), 3);
}

#[test]
fn combined_solution() {
    let nums = og10_chern_numbers().unwrap();
    assert_eq!(nums, published_chern_numbers());
    let combined = assemble_rr_equations()
        .unwrap()
        .combine(&assemble_hodge_equations(true).unwrap())
        .unwrap();
    assert_eq!(combined.rank(), 7);
    assert!(combined.is_satisfied_by(&nums).unwrap());
    assert_eq!(combined.solve().unwrap(), nums);
}

#[test]
fn hodge_rows() {
    let h = assemble_hodge_equations(false).unwrap();
    assert_eq!(h.rows().len(), 4);
    assert_eq!(h.rank(), 4);
    assert!(h.is_satisfied_by(&published_chern_numbers()).unwrap());
}

#[test]
fn misprinted_chi3_gives_fractional_numbers() {
    let mut h = assemble_hodge_equations(false).unwrap().select(&[0, 1, 3]);
    h.push_form(
        &chi_p_form(og10_spec(), 3).unwrap(),
        int(OG10_CHI_P_MISPRINT),
        "chi^3 misprint",
    )
    .unwrap();
    let sol = assemble_rr_equations().unwrap().combine(&h).unwrap().solve().unwrap();
    let c10 = sol.get(&"c10".parse().unwrap()).unwrap();
    assert_eq!(c10, &hkrr_core::algebra::rat(883_464, 5));
    assert!(!c10.is_integer());
}

#[test]
fn row_order_does_not_matter() {
    let combined = assemble_rr_equations()
        .unwrap()
        .combine(&assemble_hodge_equations(false).unwrap())
        .unwrap();
    let expected = published_chern_numbers();
    let n = combined.rows().len();
    let perms: Vec<Vec<usize>> = vec![
        (0..n).rev().collect(),
        (0..n).map(|i| (i * 3) % n).collect::<Vec<_>>(),
        vec![9, 0, 8, 1, 7, 2, 6, 3, 5, 4],
        vec![6, 7, 8, 9, 0, 1, 2, 3, 4, 5],
    ];
    for p in perms {
        let mut q = p.clone();
        q.sort();
        assert_eq!(q, (0..n).collect::<Vec<_>>());
        assert_eq!(combined.select(&p).solve().unwrap(), expected);
    }
}

#[test]
fn every_full_rank_seven_row_subset_agrees() {
    let combined = assemble_rr_equations()
        .unwrap()
        .combine(&assemble_hodge_equations(true).unwrap())
        .unwrap();
    let expected = published_chern_numbers();
    let n = combined.rows().len();
    let mut full_rank = 0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != 7 {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = combined.select(&idx);
        if sub.rank() == 7 {
            full_rank += 1;
            assert_eq!(sub.solve().unwrap(), expected, "rows {idx:?}");
        }
    }
    assert!(full_rank > 0);
}

#[test]
fn euler_check() {
    let nums = published_chern_numbers();
    let c10 = nums.get(&"c10".parse().unwrap()).unwrap().clone();
    assert_eq!(euler_characteristic_check(&nums).unwrap(), c10);
    assert_eq!(c10, int(176_904));
    let zero = ChernNumbers::zero(og10_spec());
    assert_eq!(euler_characteristic_check(&zero).unwrap(), int(0));
    let chi = chi_p_values(&nums).unwrap();
    let folded = int(2) * (&chi[0] - &chi[1] + &chi[2] - &chi[3] + &chi[4]) - &chi[5];
    assert_eq!(folded, c10);
}

#[test]
fn chi_values_at_solution() {
    let chi = chi_p_values(&published_chern_numbers()).unwrap();
    let expected: Vec<_> = [6, -111, 1062, -7173, 33534, -93132, 33534, -7173, 1062, -111, 6]
        .iter()
        .map(|&v| int(v))
        .collect();
    assert_eq!(chi, expected);
}

#[test]
fn serre_symmetry_of_forms() {
    let spec = og10_spec();
    for p in 0..=10 {
        assert_eq!(chi_p_form(spec, p).unwrap(), chi_p_form(spec, 10 - p).unwrap(), "p = {p}");
    }
}

#[test]
fn unit_functionals() {
    let spec = og10_spec();
    let nums = published_chern_numbers();
    let c10 = integrate(&GradedClass::chern(spec, 10));
    assert_eq!(evaluate(&c10, &nums).unwrap(), int(176_904));
    let c2_5 = integrate(&GradedClass::chern(spec, 2).pow(5));
    assert_eq!(evaluate(&c2_5, &nums).unwrap(), int(127_370_880));
}

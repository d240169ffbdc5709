use boole_core::boole::{boole_sum, predicted_value, vanishing_sum, IndexFrom};
use boole_core::finite_difference::{delta, difference_table, nth_delta};
use boole_core::interpolation::{
    lagrange_basis, lagrange_interpolate, leading_coeff_from_samples, sample, PointSet,
};
use boole_core::rational::{self, int};
use boole_core::{NodeGrid, Polynomial, Rational};
use num_traits::{One, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rational::ratio(n, d).unwrap())
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    vec(rat(), 0..=max_len).prop_map(Polynomial::new)
}

/// A polynomial together with a grid whose `n` is at least its degree.
fn poly_and_grid(max_n: usize) -> impl Strategy<Value = (Polynomial, NodeGrid)> {
    (0..=max_n).prop_flat_map(|n| {
        (vec(rat(), 0..=n + 1), rat(), nonzero_rat())
            .prop_map(move |(c, a, b)| (Polynomial::new(c), NodeGrid::new(a, b, n).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn eval_is_linear(p in poly(7), q in poly(7), alpha in rat(), beta in rat(), x in rat()) {
        let combined = Polynomial::linear_combine(&alpha, &p, &beta, &q);
        prop_assert_eq!(combined.eval(&x), &alpha * p.eval(&x) + &beta * q.eval(&x));
    }

    #[test]
    fn shift_inverts(p in poly(8), c in rat()) {
        prop_assert_eq!(p.shift(&c).shift(&-&c), p);
    }

    #[test]
    fn shift_evaluates_translated(p in poly(8), c in rat(), x in rat()) {
        let shifted = p.shift(&c);
        prop_assert_eq!(shifted.eval(&x), p.eval(&(&x + &c)));
        prop_assert_eq!(shifted.degree(), p.degree());
        if !p.is_zero() {
            prop_assert_eq!(shifted.leading_coefficient().unwrap(), p.leading_coefficient().unwrap());
        }
    }

    #[test]
    fn mul_evaluates_to_product(p in poly(6), q in poly(6), x in rat()) {
        let prod = p.mul(&q);
        prop_assert_eq!(prod.eval(&x), p.eval(&x) * q.eval(&x));
        if let (Some(dp), Some(dq)) = (p.degree(), q.degree()) {
            prop_assert_eq!(prod.degree(), Some(dp + dq));
        }
    }

    #[test]
    fn delta_lowers_degree_by_one(p in poly(9), h in nonzero_rat()) {
        let d = delta(&p, &h).unwrap();
        match p.degree() {
            Some(deg) if deg >= 1 => {
                prop_assert_eq!(d.degree(), Some(deg - 1));
                let expected = int(deg as i64) * p.leading_coefficient().unwrap() * &h;
                prop_assert_eq!(d.leading_coefficient().unwrap(), &expected);
            }
            _ => prop_assert!(d.is_zero()),
        }
    }

    #[test]
    fn nth_delta_annihilates_low_degree(p in poly(6), extra in 1usize..4, h in nonzero_rat()) {
        let n = p.degree().map_or(0, |d| d) + extra;
        prop_assert!(nth_delta(&p, n, &h).unwrap().is_zero());
    }

    #[test]
    fn nth_delta_of_power_is_scaled_factorial(n in 1usize..=10, h in nonzero_rat()) {
        let xn = Polynomial::monomial(Rational::one(), n);
        let expected = Rational::from_integer(boole_core::combinatorics::factorial(n as u64).into())
            * rational::pow(&h, n as u32);
        prop_assert_eq!(nth_delta(&xn, n, &h).unwrap(), Polynomial::constant(expected));
    }

    #[test]
    fn nth_delta_is_linear(p in poly(7), q in poly(7), alpha in rat(), beta in rat(), n in 0usize..5, h in nonzero_rat()) {
        let lhs = nth_delta(&Polynomial::linear_combine(&alpha, &p, &beta, &q), n, &h).unwrap();
        let rhs = Polynomial::linear_combine(
            &alpha, &nth_delta(&p, n, &h).unwrap(), &beta, &nth_delta(&q, n, &h).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn table_matches_symbolic_difference(p in poly(7), a in rat(), h in nonzero_rat(), n in 0usize..7, extra in 0usize..3) {
        let grid = NodeGrid::new(a.clone(), h.clone(), n + extra).unwrap();
        let table = difference_table(&sample(&p, &grid), n).unwrap();
        for (i, row) in table.rows().iter().enumerate() {
            prop_assert_eq!(row.len(), n + extra + 1 - i);
            prop_assert_eq!(&row[0], &nth_delta(&p, i, &h).unwrap().eval(&a));
        }
    }

    #[test]
    fn bridge_between_difference_and_sum((p, grid) in poly_and_grid(8)) {
        let symbolic = nth_delta(&p, grid.n(), grid.step()).unwrap().eval(grid.offset());
        prop_assert_eq!(symbolic, boole_sum(&p, &grid).unwrap());
    }

    #[test]
    fn interpolation_round_trips((p, grid) in poly_and_grid(8)) {
        let values = sample(&p, &grid);
        let data = PointSet::on_grid(&grid, values.clone()).unwrap();
        prop_assert_eq!(lagrange_interpolate(&data), p.clone());
        prop_assert_eq!(leading_coeff_from_samples(&values, &grid).unwrap(), p.coefficient(grid.n()));
    }

    #[test]
    fn leading_coefficient_two_paths_agree(values in vec(rat(), 1..=9), a in rat(), b in nonzero_rat()) {
        let grid = NodeGrid::new(a, b, values.len() - 1).unwrap();
        let closed_form = leading_coeff_from_samples(&values, &grid).unwrap();
        let interpolant = lagrange_interpolate(&PointSet::on_grid(&grid, values).unwrap());
        if interpolant.degree() == Some(grid.n()) {
            prop_assert_eq!(&closed_form, interpolant.leading_coefficient().unwrap());
        } else {
            prop_assert!(closed_form.is_zero());
        }
    }

    #[test]
    fn basis_is_cardinal_and_partitions_unity(nodes in proptest::collection::btree_set(rat(), 1..=10)) {
        let nodes: Vec<Rational> = nodes.into_iter().collect();
        let mut total = Polynomial::zero();
        for k in 0..nodes.len() {
            let basis = lagrange_basis(&nodes, k).unwrap();
            prop_assert_eq!(basis.degree(), Some(nodes.len() - 1));
            for (j, x) in nodes.iter().enumerate() {
                let expected = if j == k { Rational::one() } else { Rational::zero() };
                prop_assert_eq!(basis.eval(x), expected);
            }
            total = &total + &basis;
        }
        prop_assert_eq!(total, Polynomial::constant(Rational::one()));
    }

    #[test]
    fn main_theorem((p, grid) in poly_and_grid(10)) {
        prop_assert_eq!(boole_sum(&p, &grid).unwrap(), predicted_value(&p, &grid).unwrap());
    }

    #[test]
    fn sum_ignores_offset((p, grid) in poly_and_grid(8), other in rat()) {
        prop_assert_eq!(
            boole_sum(&p, &grid).unwrap(),
            boole_sum(&p, &grid.with_offset(other)).unwrap()
        );
    }

    #[test]
    fn prediction_scales_with_step((p, grid) in poly_and_grid(8), lambda in nonzero_rat()) {
        let scaled = grid.with_step(grid.step() * &lambda).unwrap();
        let factor = rational::pow(&lambda, grid.n() as u32);
        prop_assert_eq!(predicted_value(&p, &scaled).unwrap(), factor * predicted_value(&p, &grid).unwrap());
        prop_assert_eq!(boole_sum(&p, &scaled).unwrap(), predicted_value(&p, &scaled).unwrap());
    }

    #[test]
    fn sum_is_linear((p, grid) in poly_and_grid(8), q_coeffs in vec(rat(), 0..=9), alpha in rat(), beta in rat()) {
        let q = Polynomial::new(q_coeffs.into_iter().take(grid.n() + 1).collect());
        let combined = Polynomial::linear_combine(&alpha, &p, &beta, &q);
        prop_assert_eq!(
            boole_sum(&combined, &grid).unwrap(),
            &alpha * boole_sum(&p, &grid).unwrap() + &beta * boole_sum(&q, &grid).unwrap()
        );
    }
}

#[test]
fn power_differences_are_factorials() {
    let mut fact = num_bigint::BigInt::one();
    for n in 1..=12usize {
        fact *= n;
        let xn = Polynomial::monomial(Rational::one(), n);
        assert_eq!(
            nth_delta(&xn, n, &Rational::one()).unwrap(),
            Polynomial::constant(Rational::from_integer(fact.clone()))
        );
    }
}

#[test]
fn vanishing_sums_from_zero() {
    for n in 1..=25u64 {
        for m in 0..n {
            assert!(
                vanishing_sum(n, m, IndexFrom::Zero).unwrap().is_zero(),
                "n={n} m={m}"
            );
        }
    }
}

mod common;

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use proptest::prelude::*;

use common::*;
use rindler_sdc::measures::{
    classical_correlation, mutual_information, mutual_information_closed_form,
};
use rindler_sdc::protocol::bell_probabilities;
use rindler_sdc::qmat::StateVector;
use rindler_sdc::rindler::{bell_state, lift_alice, lift_alice_general, MINKOWSKI_SLOTS};
use rindler_sdc::{evaluate_point, evaluate_point_with, BellIndex, ModeSplit, ProtocolPoint};

fn every_fifth() -> Vec<ModeSplit> {
    let grid = grid21();
    (0..21)
        .step_by(5)
        .flat_map(|i| (0..21).step_by(5).map(move |j| i * 21 + j))
        .map(|k| grid[k])
        .collect()
}

#[test]
fn lift_preserves_norm_and_orthogonality() {
    for split in grid21() {
        let lifted: Vec<StateVector> = BellIndex::ALL.iter().map(|&i| lift_alice_general(i, &split)).collect();
        for (a, psi) in lifted.iter().enumerate() {
            assert!((psi.norm() - 1.0).abs() <= 1e-12);
            for phi in &lifted[a + 1..] {
                assert!(psi.inner(phi).norm() <= 1e-12);
            }
        }
    }
}

#[test]
fn single_mode_lift_never_populates_region_ii_alone() {
    for r in linspace(0.0, FRAC_PI_4, 21) {
        let split = ModeSplit::single_mode(r).unwrap();
        for idx in BellIndex::ALL {
            let psi = lift_alice_general(idx, &split);
            for b in 0..2 {
                assert_eq!(psi.amplitude(&[0, 1, b]), Complex64::new(0.0, 0.0));
            }
        }
    }
}

#[test]
fn lift_matches_general_form_for_bell_inputs() {
    for split in every_fifth() {
        for idx in BellIndex::ALL {
            let a = lift_alice(&bell_state(idx), &split).unwrap();
            let b = lift_alice_general(idx, &split);
            assert!(a.inner(&b).norm() > 1.0 - 1e-12);
        }
    }
}

proptest! {
    #[test]
    fn lift_is_linear(
        re in prop::collection::vec(-1.0f64..1.0, 4),
        im in prop::collection::vec(-1.0f64..1.0, 4),
        r in 0.0..=FRAC_PI_4,
        q in 0.0f64..=1.0,
    ) {
        let split = ModeSplit::new(r, q).unwrap();
        let coeffs: Vec<Complex64> = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a, b)).collect();
        let Ok(psi) = StateVector::normalized(coeffs, MINKOWSKI_SLOTS.to_vec()) else {
            return Ok(());
        };
        let lifted = lift_alice(&psi, &split).unwrap();
        let mut sum = vec![Complex64::new(0.0, 0.0); 8];
        for (k, c) in psi.amplitudes().iter().enumerate() {
            let basis = StateVector::basis(&[(k >> 1) as u8, (k & 1) as u8], MINKOWSKI_SLOTS.to_vec()).unwrap();
            for (s, x) in sum.iter_mut().zip(lift_alice(&basis, &split).unwrap().amplitudes()) {
                *s += c * x;
            }
        }
        for (x, y) in lifted.amplitudes().iter().zip(&sum) {
            prop_assert!((x - y).norm() <= 1e-12);
        }
    }
}

#[test]
fn probabilities_are_normalized_and_closed_form_exact() {
    for split in grid21() {
        let mut reference: Option<[f64; 4]> = None;
        for (idx, msg) in labels() {
            let pt = ProtocolPoint::new(split, idx, msg);
            let rho = pt.shared_state();
            assert!(rho.matrix().is_x_form(1e-12), "not X-form at {split:?}");
            let p = bell_probabilities(&rho).unwrap();
            assert!(p.as_array().iter().all(|&x| (0.0..=1.0).contains(&x)));
            assert!((p.total() - 1.0).abs() <= 1e-10);
            let closed = evaluate_point_with(&pt, false).unwrap().p_success_closed;
            assert!((p.get(pt.expected_outcome()) - closed).abs() <= 1e-10);

            let mut sorted = p.as_array();
            sorted.sort_by(f64::total_cmp);
            match reference {
                None => reference = Some(sorted),
                Some(want) => {
                    for (a, b) in sorted.iter().zip(want) {
                        assert!((a - b).abs() <= 1e-10);
                    }
                }
            }
        }
    }
}

#[test]
fn sent_message_is_most_likely_in_single_mode() {
    for r in linspace(0.0, FRAC_PI_4, 21) {
        let split = ModeSplit::single_mode(r).unwrap();
        for (idx, msg) in labels() {
            let pt = ProtocolPoint::new(split, idx, msg);
            let p = bell_probabilities(&pt.shared_state()).unwrap();
            assert_eq!(p.most_likely(), pt.expected_outcome());
        }
    }
}

#[test]
fn closed_forms_match_pipeline_on_grid() {
    for split in grid21() {
        let q = evaluate_point_with(&ProtocolPoint::standard(split), false).unwrap();
        assert!((q.p_success - q.p_success_closed).abs() <= 1e-10);
        assert!((q.capacity_bits - q.capacity_closed).abs() <= 1e-9);
        assert!((q.negativity_bits - q.negativity_closed).abs() <= 1e-9);
        let rho = ProtocolPoint::standard(split).shared_state();
        let i = mutual_information(&rho).unwrap();
        assert!((i - mutual_information_closed_form(&split)).abs() <= 1e-9);
        assert!((q.mutual_info_bits - i).abs() <= 1e-12);
    }
}

#[test]
fn quantities_do_not_depend_on_labels() {
    for split in grid21() {
        let base = evaluate_point_with(&ProtocolPoint::standard(split), false).unwrap();
        for (idx, msg) in labels() {
            let q = evaluate_point_with(&ProtocolPoint::new(split, idx, msg), false).unwrap();
            assert!((q.p_success - base.p_success).abs() <= 1e-8);
            assert!((q.capacity_bits - base.capacity_bits).abs() <= 1e-8);
            assert!((q.negativity_bits - base.negativity_bits).abs() <= 1e-8);
        }
    }
    for split in every_fifth() {
        let base = evaluate_point(&ProtocolPoint::standard(split)).unwrap().discord_bits().unwrap();
        for (idx, msg) in labels() {
            let d = evaluate_point(&ProtocolPoint::new(split, idx, msg)).unwrap().discord_bits().unwrap();
            assert!((d - base).abs() <= 1e-8, "{split:?} {idx} {msg}: {d} vs {base}");
        }
    }
}

#[test]
fn discord_is_bounded_by_mutual_information() {
    for split in every_fifth() {
        let q = evaluate_point(&ProtocolPoint::standard(split)).unwrap();
        let d = q.discord_bits().unwrap();
        assert!(d >= 0.0 && d <= q.mutual_info_bits + 1e-12, "{split:?}: D {d}, I {}", q.mutual_info_bits);
    }
}

#[test]
fn leakage_into_region_ii_degrades_inertial_pair() {
    let reports: Vec<_> = linspace(0.0, 1.0, 50)
        .into_iter()
        .map(|q| evaluate_point(&ProtocolPoint::standard(ModeSplit::new(0.0, q).unwrap())).unwrap())
        .collect();
    let col = |f: fn(&rindler_sdc::QuantityReport) -> f64| reports.iter().map(f).collect::<Vec<_>>();
    assert!(non_increasing(&col(|q| q.p_success), 0.0));
    assert!(non_increasing(&col(|q| q.capacity_bits), 0.0));
    assert!(non_increasing(&col(|q| q.negativity_bits), 0.0));
    assert!(non_increasing(&col(|q| q.discord_bits().unwrap()), 1e-9));
}

#[test]
fn optimizer_is_at_least_as_good_as_brute_force() {
    let grid = grid21();
    let mut rng = rng(21);
    for _ in 0..20 {
        use rand::Rng;
        let split = grid[rng.gen_range(0..grid.len())];
        let rho = ProtocolPoint::standard(split).shared_state();
        let found = classical_correlation(&rho).unwrap().value;
        let oracle = oracle_classical_correlation(&rho, 0.5);
        assert!(found >= oracle - 1e-12, "{split:?}: {found} < {oracle}");
        assert!(found - oracle <= 1e-6, "{split:?}: {found} vs {oracle}");
    }
}

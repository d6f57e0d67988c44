use kmc4_core::extremal::{
    extremal_witness, sigma_exact, verify_conjecture, verify_theorem1, Verdict,
};
use kmc4_core::{enumerate_graphical_sequences, is_potentially, km_minus_c4, Limits};

#[test]
fn exact_threshold_invariants() {
    let l = Limits::default();
    for m in 4..=6 {
        for n in m..=8 {
            let r = sigma_exact(m, n, &l).unwrap();
            let exact = r.exact.unwrap();
            assert_eq!(exact % 2, 0);
            assert!(exact >= r.lower_bound, "m={m} n={n}");
            assert_eq!(r.formula, r.lower_bound);
            let p = km_minus_c4(m).unwrap();
            for s in &r.extremal_sequences {
                assert_eq!(s.degree_sum() + 2, exact);
                assert_eq!(is_potentially(s, &p, &l).unwrap().conclusive(), Some(false));
            }
            for s in enumerate_graphical_sequences(n, exact, &l).unwrap() {
                assert_eq!(
                    is_potentially(&s, &p, &l).unwrap().conclusive(),
                    Some(true),
                    "{s}"
                );
            }
            if exact == r.lower_bound {
                let (_, w) = extremal_witness(m, n).unwrap();
                assert!(r.extremal_sequences.contains(&w), "m={m} n={n}");
            }
        }
    }
}

#[test]
fn m5_threshold_is_4n_minus_4() {
    let l = Limits::default();
    for n in 5..=9 {
        assert_eq!(sigma_exact(5, n, &l).unwrap().exact, Some(4 * n - 4));
    }
}

#[test]
fn m4_threshold_is_2n() {
    let l = Limits::default();
    for n in 4..=9 {
        assert_eq!(sigma_exact(4, n, &l).unwrap().exact, Some(2 * n));
    }
}

#[test]
fn theorem1_witnesses() {
    let l = Limits::default();
    for n in 4..=10 {
        for m in 4..=n {
            let r = verify_theorem1(m, n, &l).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn larger_m_is_reported_not_assumed() {
    let l = Limits::default();
    let reports = verify_conjecture(7, 7..=9, &l).unwrap();
    let verdicts: Vec<_> = reports.iter().map(|r| r.verdict).collect();
    assert_eq!(
        verdicts,
        [Verdict::Matches, Verdict::Exceeds, Verdict::Exceeds]
    );
    assert_eq!(reports[2].exact, Some(56));
    assert_eq!(reports[2].extremal_sequences[0].terms(), &[6; 9]);
}

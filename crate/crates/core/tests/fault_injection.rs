//! Deliberate single-coefficient corruption: exactly the implicated
//! verdicts must fail, and `first_failure` must localize the minimal index
//! at which the identity actually breaks.

use std::sync::Arc;

use apbern::exactq::{GaussRational, MultiPoly, VarSet};
use apbern::families::{Trig, UFactory};
use apbern::fps::KernelSpec;
use apbern::theorems::{member_key, Fault, SampleSet, Session, VerdictReport};

fn q(n: i64, d: i64) -> GaussRational {
    GaussRational::from_ratio(n, d)
}

fn key_vars() -> Arc<VarSet> {
    // Only the rendered text of the argument polynomials enters the key,
    // so any variable set containing the symbols works.
    VarSet::new(["x", "z"]).unwrap()
}

fn params_of<'a>(r: &'a VerdictReport, key: &str) -> Option<&'a str> {
    r.params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
}

#[test]
fn corrupted_cosine_member_fails_partials_at_its_own_index() {
    let vars = key_vars();
    let x = MultiPoly::var(&vars, "x").unwrap();
    let z = MultiPoly::var(&vars, "z").unwrap();
    let kernel = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
    let key = member_key(&kernel, &UFactory::One, Some(&x), Trig::Cos, Some(&z));

    let fault = Fault {
        key,
        index: 3,
        monomial: Some(("x".into(), 1)),
        delta: q(1, 7),
    };
    let sess = Session::with_fault(SampleSet::standard(0), fault);
    let reports = sess.verify_partials(5);

    let clean = Session::new(SampleSet::standard(0)).verify_partials(5);
    assert!(clean.iter().all(|r| r.passed), "baseline must be green");

    let is_target = |r: &VerdictReport| {
        params_of(r, "lambda") == Some("1")
            && params_of(r, "mu") == Some("-1")
            && params_of(r, "v") == Some("1")
            && params_of(r, "u") == Some("one")
    };
    for r in &reports {
        let relation = params_of(r, "relation").unwrap();
        if is_target(r) && (relation == "dx-c" || relation == "cross-cs") {
            // The x-linear bump survives d/dx, so the identity first breaks
            // at the corrupted member's own index.
            assert!(!r.passed, "{relation} should fail");
            assert_eq!(r.first_failure.as_ref().unwrap().index, vec![3]);
        } else if is_target(r) && relation == "dz-s" {
            // Here the corrupted cosine member only appears on the n = 4
            // right-hand side; d/dz checks of the cosine member itself kill
            // the x-linear bump.
            assert!(!r.passed, "{relation} should fail");
            assert_eq!(r.first_failure.as_ref().unwrap().index, vec![4]);
        } else {
            assert!(
                r.passed,
                "unimplicated verdict failed: {relation} {:?}",
                r.params
            );
        }
    }
}

#[test]
fn corrupted_kernel_number_fails_order_additivity_once_it_enters() {
    let kernel = KernelSpec::new(1, q(1, 1), q(1, 1)).unwrap();
    let key = member_key(&kernel, &UFactory::One, None, Trig::None, None);

    let fault = Fault {
        key,
        index: 2,
        monomial: None,
        delta: q(3, 5),
    };
    let sess = Session::with_fault(SampleSet::standard(0), fault);
    let reports = sess.verify_order_additivity(4);

    let max_n = 4usize;
    let mut failing = 0usize;
    for r in &reports {
        // The corrupted order-1 number of index 2 first meets a nonzero
        // partner member at n = 2 + alpha (+1 for the sine kind): the
        // unit-branch t^alpha prefactor zeroes lower members, and the
        // sin(zt) factor raises the valuation by one more. Beyond max_n the
        // corruption never enters the sweep.
        let alpha: usize = params_of(r, "alpha-part").unwrap().parse().unwrap();
        let sine = usize::from(params_of(r, "kind") == Some("s"));
        let entry = 2 + alpha + sine;
        let implicated = params_of(r, "lambda") == Some("1")
            && params_of(r, "mu") == Some("1")
            && params_of(r, "v-part") == Some("1")
            && entry <= max_n;
        if implicated {
            assert!(!r.passed, "implicated verdict passed: {:?}", r.params);
            assert_eq!(
                r.first_failure.as_ref().unwrap().index,
                vec![entry],
                "{:?}",
                r.params
            );
            failing += 1;
        } else {
            assert!(r.passed, "unimplicated verdict failed: {:?}", r.params);
        }
    }
    assert!(failing > 0, "the fault must implicate some verdicts");
}

#[test]
fn corrupted_sine_member_breaks_the_complex_split() {
    let vars = key_vars();
    let x = MultiPoly::var(&vars, "x").unwrap();
    let z = MultiPoly::var(&vars, "z").unwrap();
    let kernel = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
    let u = UFactory::GouldHopper { m: 2 };
    let key = member_key(&kernel, &u, Some(&x), Trig::Sin, Some(&z));

    let fault = Fault {
        key,
        index: 2,
        monomial: Some(("z".into(), 1)),
        delta: q(1, 3),
    };
    let sess = Session::with_fault(SampleSet::standard(0), fault);

    for r in sess.verify_complex_split(4) {
        let implicated = params_of(&r, "lambda") == Some("1")
            && params_of(&r, "mu") == Some("-1")
            && params_of(&r, "v") == Some("1")
            && params_of(&r, "u") == Some("gould-hopper(2)");
        if implicated {
            assert!(!r.passed);
            // Index tuple [n, part]: part 1 is the imaginary/sine pairing.
            assert_eq!(r.first_failure.as_ref().unwrap().index, vec![2, 1]);
        } else {
            assert!(r.passed, "unimplicated verdict failed: {:?}", r.params);
        }
    }

    // The double-angle sweep never touches this member route (its sine
    // factors use argument 2z for the factory side and the plain factory
    // for the z side), so it stays green.
    for r in sess.verify_double_angle(3) {
        assert!(r.passed, "{:?} {:?}", r.params, r.first_failure);
    }
}

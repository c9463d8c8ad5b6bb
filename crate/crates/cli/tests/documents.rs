use monofact::document::{emit_action, emit_document, emit_monoid, parse_action, parse_document, parse_monoid, MonoidDocument};
use monofact_core::action::enumerate_actions;
use monofact_core::catalog;
use monofact_core::enumerate::enumerate_monoids;
use monofact_core::FiniteMonoid;
use proptest::prelude::*;
use proptest::sample::select;

fn population() -> Vec<FiniteMonoid> {
    let mut all = catalog::all();
    for n in 1..=3 {
        all.extend(enumerate_monoids(n, true).unwrap());
    }
    all
}

/// A population member, relabelled by a random permutation and optionally
/// renamed and given fresh labels.
fn document() -> impl Strategy<Value = MonoidDocument> {
    select(population()).prop_flat_map(|m| {
        let n = m.size();
        (
            Just(m),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            proptest::option::of("[a-z][a-z0-9]{0,6}"),
            proptest::option::of(proptest::collection::vec("[a-z]{1,3}", n)),
        )
    })
    .prop_map(|(m, perm, name, labels)| {
        let mut doc = MonoidDocument::from_monoid(&m.permuted(&perm).unwrap());
        doc.name = name;
        doc.labels = labels.map(|ls| ls.into_iter().enumerate().map(|(i, l)| format!("{l}{i}")).collect());
        doc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_inverts_emit(doc in document()) {
        let text = emit_document(&doc);
        prop_assert_eq!(parse_document(&text).unwrap(), doc.clone());
        let m = doc.to_monoid().unwrap();
        prop_assert_eq!(emit_monoid(&m), text.clone());
        prop_assert_eq!(emit_monoid(&parse_monoid(&text).unwrap()), text);
    }

    #[test]
    fn emit_is_canonical(doc in document()) {
        // Reformatting the input does not change the emitted form.
        let text = emit_document(&doc);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let pretty = serde_json::to_string_pretty(&value).unwrap();
        prop_assert_eq!(emit_monoid(&parse_monoid(&pretty).unwrap()), text);
    }
}

#[test]
fn actions_round_trip() {
    let small: Vec<FiniteMonoid> = catalog::all().into_iter().filter(|m| m.size() <= 4).collect();
    for b in &small {
        for a in &small {
            for act in enumerate_actions(b, a).unwrap() {
                let text = emit_action(&act);
                assert_eq!(parse_action(&text, None, b, a).unwrap(), act);
            }
        }
    }
}

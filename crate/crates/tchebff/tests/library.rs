use proptest::prelude::*;
use tchebff::parallel::par_scan;
use tchebff::parse::{parse_expr, parse_field, parse_poly};
use tchebff_core::cover::scan_with;
use tchebff_core::{Cover, Limits};

fn cover(field: &str, poly: &str) -> Cover {
    let f = parse_field(field, 0, &Limits::default()).unwrap();
    Cover::new(parse_poly(poly, &f).unwrap()).unwrap()
}

#[test]
fn parallel_scan_matches_sequential() {
    let lim = Limits::default();
    for (field, poly, m) in [("7", "Y^3-T", 3), ("2", "Y^2+Y+T^3+T", 8), ("3^2", "Y^3-Y-T^2", 2), ("5", "Y^4-T^2-1", 3)] {
        let c = cover(field, poly);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let par = pool.install(|| par_scan(&c, m, &lim).unwrap());
        let seq = scan_with(&c, m, &lim).unwrap();
        assert_eq!(par.records, seq.records, "{poly} over {field}");
        assert_eq!(par.levels, seq.levels);
        assert_eq!(par.truncated_at, seq.truncated_at);
    }
}

fn expr() -> impl Strategy<Value = String> {
    let atom = prop_oneof![Just("T".to_string()), Just("Y".to_string()), (0u64..200).prop_map(|n| n.to_string())];
    atom.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}-{b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            (inner.clone(), 0u64..4).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.prop_map(|a| format!("( {a} )")),
        ]
    })
}

proptest! {
    #[test]
    fn grammar_is_total_and_display_reparses(
        src in expr(),
        field in prop::sample::select(vec!["2", "3", "7", "2^3", "5^2"]),
    ) {
        let f = parse_field(field, 0, &Limits::default()).unwrap();
        let p = parse_expr(&src, &f).unwrap();
        let printed = p.display();
        let again = parse_expr(&printed, &f).unwrap();
        prop_assert_eq!(&again, &p, "{} printed as {}", src, printed);
        prop_assert_eq!(again.display(), printed);
    }
}

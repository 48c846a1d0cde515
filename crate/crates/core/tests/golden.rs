use beerpath::fixtures::{emit_fixture, fixture, trace, NAMES};
use beerpath::graph::validate;
use beerpath::harness::check_instance;

fn golden(file: &str) -> String {
    let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn emitted_fixture_files() {
    for name in NAMES {
        let file = format!("{}.json", name.to_lowercase().replace('-', "_"));
        assert_eq!(emit_fixture(name).unwrap() + "\n", golden(&file), "{name}");
    }
    assert_eq!(
        emit_fixture("FIX-8FAN").unwrap(),
        "{\"n\": 8, \"edges\": [[0,1,1.0],[1,2,1.0],[2,3,1.0],[3,4,1.0],[4,5,1.0],[5,6,1.0],[6,7,1.0],\
[7,0,1.0],[0,2,1.0],[2,4,1.0],[2,7,1.0],[4,6,1.0],[4,7,1.0]], \"beer\": [6]}"
    );
}

#[test]
fn query_traces() {
    for (name, s, t, file) in [
        ("FIX-8FAN", 1, 5, "fix_8fan_1_5.trace"),
        ("FIX-H6", 1, 4, "fix_h6_1_4.trace"),
        ("FIX-T3", 0, 1, "fix_t3_0_1.trace"),
    ] {
        assert_eq!(trace(name, s, t).unwrap(), golden(file), "{name} {s}->{t}");
    }
}

#[test]
fn fixtures_validate_and_verify() {
    for name in NAMES {
        let g = fixture(name).unwrap();
        assert!(validate(&g).is_ok());
        let r = check_instance(&g).unwrap();
        assert!(r.is_ok(), "{name}: {r}");
    }
}

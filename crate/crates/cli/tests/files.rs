//! Bundled model files, export round trips and parser robustness.

use std::path::PathBuf;

use lgcone_cli::commands::{self, CliError};
use lgcone_cli::{export, parse};
use lgcone_core::models::{self, BUNDLED_NAMES};
use proptest::prelude::*;

fn model_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("models")
        .join(format!("{name}.lg"))
}

#[test]
fn bundled_files_match_exports() {
    for name in BUNDLED_NAMES {
        let on_disk = std::fs::read_to_string(model_path(name)).unwrap();
        assert_eq!(on_disk, commands::cmd_model(name).unwrap(), "{name}");
    }
}

#[test]
fn export_of_parse_is_canonical() {
    for name in BUNDLED_NAMES {
        let text = commands::cmd_model(name).unwrap();
        let p = parse::parse(&text).unwrap();
        assert_eq!(export::presentation(&p), text, "{name}");
        let l = commands::load(&text).unwrap();
        assert_eq!(
            l.model.as_ref().map(|m| m.name.clone()),
            models::by_name(name).map(|m| m.name)
        );
    }
}

#[test]
fn hand_written_file_normalizes() {
    let src = "\
# Inoue surface, written loosely
algebra inoue
basis a, b, g1, g2
d g2 = -1/2 g2^a - 3/7 a^g1   # order of monomials is free
d g1 = 3/7 a∧g2 + 1/2*a^g1
d b = −a^b
d a = 0
J: a -> b, g1 -> g2
metric lck = a^b + g1^g2
";
    let expected = "\
# salamon: (0,-12,1/2*13+3/7*14,-3/7*13+1/2*14)
algebra inoue
dim 4
basis a b g1 g2
d a = 0
d b = -a^b
d g1 = 1/2 a^g1 + 3/7 a^g2
d g2 = -3/7 a^g1 + 1/2 a^g2
J: a -> b, b -> -a, g1 -> g2, g2 -> -g1
metric lck = a^b + g1^g2
";
    let canon = export::presentation(&parse::parse(src).unwrap());
    assert_eq!(canon, expected);
    assert_eq!(export::presentation(&parse::parse(&canon).unwrap()), canon);
}

const TOKENS: &[&str] = &[
    "algebra", "dim", "basis", "d", "J:", "metric", "=", "->", ",", "^", "+", "-", "/", "*", "#",
    "\n", " ", "0", "1", "3/7", "a1", "b1", "g1", "zz", "1/0", "∧", "−", "→", "é",
];

fn mutate(text: &str, ops: &[(u8, usize, usize)]) -> String {
    let mut chars: Vec<char> = text.chars().collect();
    for &(op, at, tok) in ops {
        if chars.is_empty() {
            break;
        }
        let at = at % chars.len();
        let token: Vec<char> = TOKENS[tok % TOKENS.len()].chars().collect();
        match op % 3 {
            0 => {
                chars.remove(at);
            }
            1 => {
                chars.splice(at..at, token);
            }
            _ => {
                chars.splice(at..(at + 1).min(chars.len()), token);
            }
        }
    }
    chars.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    // Mutated files never panic; they load, or fail with a located error.
    #[test]
    fn mutations_never_crash(
        model in 0usize..4,
        ops in proptest::collection::vec((any::<u8>(), any::<usize>(), any::<usize>()), 1..6),
    ) {
        let name = ["inoue_s0", "torus2", "kodaira_thurston", "hopf"][model];
        let text = mutate(&commands::cmd_model(name).unwrap(), &ops);
        match commands::load(&text) {
            Ok(l) => {
                // whatever parsed must survive a round trip
                let canon = export::presentation(&l.presentation);
                prop_assert_eq!(export::presentation(&parse::parse(&canon).unwrap()), canon);
            }
            Err(CliError::Parse(e)) => {
                prop_assert!(e.line >= 1 && e.column >= 1);
                prop_assert!(e.line <= text.lines().count() + 1);
            }
            Err(CliError::Invalid { line, .. }) => prop_assert!(line <= text.lines().count() + 1),
            Err(other) => prop_assert!(false, "unexpected error {}", other),
        }
    }

    // Random small rational coefficients round-trip exactly.
    #[test]
    fn coefficients_round_trip(nums in proptest::collection::vec((-50i64..50, 1i64..30), 4)) {
        let c: Vec<String> = nums.iter().map(|(p, q)| {
            let r = num::rational::Ratio::new(*p, *q);
            let sign = if *r.numer() < 0 { "-" } else { "+" };
            let a = r.numer().abs();
            if *r.denom() == 1 { format!("{sign} {a}") } else { format!("{sign} {a}/{}", r.denom()) }
        }).collect();
        let src = format!(
            "algebra t\nbasis x y u v\nd x = 0\nd y = 0\nd u = 0\nd v = 0\nJ: x -> y, u -> v\nmetric m = {} x^y {} x^u {} y^v {} u^v\n",
            c[0], c[1], c[2], c[3]
        );
        let p = parse::parse(&src).unwrap();
        let canon = export::presentation(&p);
        let again = parse::parse(&canon).unwrap();
        prop_assert_eq!(&again.metrics, &p.metrics);
        prop_assert_eq!(export::presentation(&again), canon);
    }
}

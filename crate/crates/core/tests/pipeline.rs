//! Cross-module flows: enumerate → encode → erase → repair, serialization
//! goldens, and thread-count independence.

use towerlrc::checks::{run_suite, CheckConfig};
use towerlrc::gf::build_field;
use towerlrc::lrc::{
    dimension_rank, encode, exhaustive_min_distance, generator_matrix, CodeSpec,
    DEFAULT_MESSAGE_BUDGET,
};
use towerlrc::recovery::{recover_erasure, recovery_sets, set_of_position};
use towerlrc::rng::SplitMix64;
use towerlrc::tower::{Tower, DEFAULT_PLACE_BUDGET};
use towerlrc::Fe;

#[test]
fn encode_erase_repair_roundtrip_q3() {
    let tower = Tower::new(build_field(3).unwrap());
    let f = tower.field();
    let spec = CodeSpec::new(3, 1, 1).unwrap();
    let places = tower.enumerate_split_places(1, DEFAULT_PLACE_BUDGET).unwrap();
    let gm = generator_matrix(f, &spec, &places, 1).unwrap();
    assert_eq!(dimension_rank(f, &gm), 4);
    let sets = recovery_sets(&places, 3).unwrap();

    let mut rng = SplitMix64::new(42);
    for _ in 0..200 {
        let msg: Vec<Fe> = (0..4).map(|_| f.from_index(rng.below(9) as u32).unwrap()).collect();
        let cw = encode(f, &gm, &msg).unwrap();
        let erased = rng.below(18) as usize;
        let mut word: Vec<Option<Fe>> = cw.iter().map(|&x| Some(x)).collect();
        word[erased] = None;
        let set = set_of_position(&sets, erased).unwrap();
        let repaired = recover_erasure(f, set, &word, erased).unwrap();
        assert_eq!(repaired.value, cw[erased]);
    }
}

#[test]
fn exhaustive_distance_equals_designed_on_the_smoke_code() {
    let tower = Tower::new(build_field(3).unwrap());
    let f = tower.field();
    let spec = CodeSpec::new(3, 1, 1).unwrap();
    let places = tower.enumerate_split_places(1, DEFAULT_PLACE_BUDGET).unwrap();
    let gm = generator_matrix(f, &spec, &places, 1).unwrap();
    let res = exhaustive_min_distance(f, &gm, DEFAULT_MESSAGE_BUDGET).unwrap();
    assert_eq!(spec.designed_distance(), 12);
    assert_eq!(res.distance, 12);
}

#[test]
fn matrix_and_suite_results_are_thread_count_independent() {
    let tower = Tower::new(build_field(5).unwrap());
    let f = tower.field();
    let spec = CodeSpec::new(5, 2, 5).unwrap();
    let places = tower.enumerate_split_places(2, DEFAULT_PLACE_BUDGET).unwrap();
    let rows_1: Vec<Vec<Fe>> = {
        let gm = generator_matrix(f, &spec, &places, 1).unwrap();
        (0..gm.k()).map(|r| gm.row(r).to_vec()).collect()
    };
    for threads in [2usize, 3, 8] {
        let gm = generator_matrix(f, &spec, &places, threads).unwrap();
        for (r, row) in rows_1.iter().enumerate() {
            assert_eq!(gm.row(r), row.as_slice(), "row {r} differs at {threads} threads");
        }
    }

    let one = run_suite(&tower, "props", &CheckConfig { threads: 1, ..Default::default() });
    let four = run_suite(&tower, "props", &CheckConfig { threads: 4, ..Default::default() });
    let render = |checks: &[towerlrc::checks::Check]| -> Vec<String> {
        checks.iter().map(|c| format!("{}|{}|{}", c.id, c.pass, c.detail)).collect()
    };
    assert_eq!(render(&one.unwrap()), render(&four.unwrap()));
}

#[test]
fn suite_all_passes_at_q3_and_q5() {
    for q in [3u32, 5] {
        let tower = Tower::new(build_field(q).unwrap());
        let checks = run_suite(&tower, "all", &CheckConfig::default()).unwrap();
        assert!(checks.len() > 20);
        for c in &checks {
            assert!(c.pass, "q={q}: {} failed: {}", c.id, c.detail);
        }
    }
}

//! Property tests for the text formats: parse is a left inverse of
//! serialize for instances, solutions, and combined streams.

mod common;

use common::{random_connected_graph, random_permutation, rng};
use proptest::prelude::*;
use rand::Rng;
use tsw::format;
use tsw::instance::{Instance, SwapSequence, Variant};

fn random_instance(seed: u64, n: usize, variant: u8) -> Instance {
    let mut rng = rng(seed);
    let g = random_connected_graph(&mut rng, n, n);
    match variant % 3 {
        0 => Instance::new_ts(g, random_permutation(&mut rng, n)).unwrap(),
        1 => {
            let vc: Vec<u32> = (0..n).map(|_| rng.gen_range(0..4)).collect();
            let perm = random_permutation(&mut rng, n);
            let tc: Vec<u32> = (0..n).map(|t| vc[perm[t]]).collect();
            Instance::new_cts(g, vc, tc).unwrap()
        }
        _ => {
            let dests: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    let mut set: Vec<usize> =
                        (0..rng.gen_range(1..=3usize)).map(|_| rng.gen_range(0..n)).collect();
                    set.sort_unstable();
                    set.dedup();
                    set
                })
                .collect();
            Instance::new_sts(g, dests).unwrap()
        }
    }
}

proptest! {
    #[test]
    fn instance_roundtrip(seed: u64, n in 1usize..10, variant in 0u8..3) {
        let inst = random_instance(seed, n, variant);
        let text = format::serialize_instance(&inst);
        let parsed = format::parse_instance(&text).unwrap();
        prop_assert_eq!(&parsed.instance, &inst);
        prop_assert_eq!(parsed.variant, inst.variant());
        prop_assert_eq!(parsed.budget, None);
        // serialization is deterministic
        prop_assert_eq!(format::serialize_instance(&parsed.instance), text);
    }

    #[test]
    fn budget_trailer_roundtrip(seed: u64, n in 1usize..10, budget in 0u64..1_000_000) {
        let inst = random_instance(seed, n, 0);
        let text = format!("{}budget {budget}\n", format::serialize_instance(&inst));
        let parsed = format::parse_instance(&text).unwrap();
        prop_assert_eq!(parsed.budget, Some(budget));
        prop_assert_eq!(parsed.instance, inst);
    }

    #[test]
    fn solution_roundtrip(swaps in prop::collection::vec((0usize..50, 0usize..50), 0..40)) {
        let seq = SwapSequence::new(swaps.iter().copied().filter(|&(u, v)| u != v));
        let text = format::serialize_solution(&seq);
        prop_assert_eq!(format::parse_solution(&text).unwrap(), seq);
    }

    #[test]
    fn stream_roundtrip(seed: u64, n in 2usize..10, variant in 0u8..3,
                        swaps in prop::collection::vec((0usize..9, 0usize..9), 0..20)) {
        let inst = random_instance(seed, n, variant);
        let seq = SwapSequence::new(swaps.iter().copied().filter(|&(u, v)| u != v));
        let text = format!(
            "{}budget 42\n{}",
            format::serialize_instance(&inst),
            format::serialize_solution(&seq)
        );
        let stream = format::parse_stream(&text).unwrap();
        prop_assert_eq!(stream.instance.instance, inst);
        prop_assert_eq!(stream.instance.budget, Some(42));
        prop_assert_eq!(stream.solution, Some(seq));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(seed: u64, n in 1usize..8) {
        let inst = random_instance(seed, n, 0);
        let noisy: String = format::serialize_instance(&inst)
            .lines()
            .map(|l| format!("{l} # trailing comment\n\n"))
            .collect();
        let text = format!("# header comment\n\n{noisy}");
        prop_assert_eq!(format::parse_instance(&text).unwrap().instance, inst);
    }
}

#[test]
fn variant_is_recognized_from_dest_shape() {
    // an STS file whose sets are all singletons forming a permutation still
    // parses as authored (sts), not silently promoted
    let text = "tsw v1 sts\nn 2 m 1\ne 0 1\nd 0 1 1\nd 1 1 0\n";
    let parsed = format::parse_instance(text).unwrap();
    assert_eq!(parsed.variant, Variant::Sts);
}

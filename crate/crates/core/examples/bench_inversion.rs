use modrecip::bench::run_bench;

fn main() {
    for bits in [64, 256, 1024] {
        let r = run_bench(bits, 200, 7).expect("valid parameters");
        println!(
            "{bits:>5} bits: reciprocity {:>7} ns, extended euclid {:>7} ns, {}/{} agree",
            r.median_ns_reciprocity, r.median_ns_ext_gcd, r.agreement_count, r.iterations
        );
    }
}

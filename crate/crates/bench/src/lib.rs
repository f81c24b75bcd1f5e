//! Shared helpers for the criterion benchmarks.

use ascentlab::constructions::{
    build_cd_chain, cd_start, BridgeConvention, CdParams, Variant,
};
use ascentlab::vcsp::{Assignment, VcspInstance};

/// A P10 chain of `m` gadgets plus its designated start assignment.
pub fn chain_with_start(m: u32) -> (VcspInstance, Assignment) {
    let params = CdParams::new(m, m, Variant::P10, BridgeConvention::ASide)
        .expect("benchmark parameters are in range");
    let inst = build_cd_chain(&params).expect("chain builds");
    let start = cd_start(&params).expect("start resolves");
    (inst, start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helper_builds_a_runnable_chain() {
        let (inst, start) = chain_with_start(3);
        assert_eq!(inst.num_vars(), 24);
        assert_eq!(start.len(), 24);
        inst.evaluate(&start).unwrap();
    }
}

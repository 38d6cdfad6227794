use serde::Serialize;

use super::{h_coinvariants, k_plus_h, CoidealSubalgebra, GeneralizedQuotient};
use crate::error::Result;
use crate::hopf::HopfAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TakeuchiReport {
    /// `H^{co H/K⁺H} = K` per coideal subalgebra.
    pub sub_round_trips: Vec<bool>,
    /// `H^{co Q}⁺H = I` per quotient.
    pub quot_round_trips: Vec<bool>,
    /// `dim K · dim H/K⁺H = dim H` per coideal subalgebra.
    pub freeness: Vec<bool>,
    pub failures: Vec<String>,
}

impl TakeuchiReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn takeuchi_check(
    h: &HopfAlgebra,
    subs: &[CoidealSubalgebra],
    quots: &[GeneralizedQuotient],
) -> Result<TakeuchiReport> {
    let mut report = TakeuchiReport {
        sub_round_trips: Vec::new(),
        quot_round_trips: Vec::new(),
        freeness: Vec::new(),
        failures: Vec::new(),
    };
    for (i, k) in subs.iter().enumerate() {
        let q = k_plus_h(h, k)?;
        let back = h_coinvariants(h, &q)?;
        let ok = back == *k;
        let free = k.dim() * q.dim() == h.dim();
        if !ok {
            report.failures.push(format!(
                "sub {i}: coinvariants of H/K⁺H have dim {} not {}",
                back.dim(),
                k.dim()
            ));
        }
        if !free {
            report.failures.push(format!(
                "sub {i}: dim K · dim Q = {} · {} ≠ {}",
                k.dim(),
                q.dim(),
                h.dim()
            ));
        }
        report.sub_round_trips.push(ok);
        report.freeness.push(free);
    }
    for (i, q) in quots.iter().enumerate() {
        let k = h_coinvariants(h, q)?;
        let back = k_plus_h(h, &k)?;
        let ok = back.ideal == q.ideal;
        if !ok {
            report.failures.push(format!(
                "quot {i}: K⁺H has dim {} not {}",
                back.ideal.dim(),
                q.ideal.dim()
            ));
        }
        report.quot_round_trips.push(ok);
    }
    Ok(report)
}

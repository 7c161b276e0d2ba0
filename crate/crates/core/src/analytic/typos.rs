//! Catalogue of misprinted closed forms with their oracle evidence.

use super::{ClosedFormReport, Quantity, Status};

/// A misprint: the form as printed and the form the oracle certifies.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TypoEntry {
    pub quantity: Quantity,
    pub literal: &'static str,
    pub corrected: &'static str,
}

pub const TYPOS: &[TypoEntry] = &[
    TypoEntry {
        quantity: Quantity::CohMeanN,
        literal: "<n> = |lambda|^2/4 {|1+w|^2|alpha+s/2|^2 + |1-w|^2|alpha-s/2|^2 + 2e^{-s^2/2} Re[e^{2is Im alpha}(1-|w|^2-2i Im w)(alpha+s/2)*(alpha-s/2)]}",
        corrected: "prefactor |lambda|^2/2",
    },
    TypoEntry {
        quantity: Quantity::CohA2A2,
        literal: "<a+^2 a^2> = |lambda|^2/4 {... + 2e^{-s^2/2} Re[e^{2is|alpha| sin phi}(1+w*)(1-w)(alpha+s/2)*^2(alpha-s/2)^2]}",
        corrected: "prefactor |lambda|^2/2; phase e^{2is Im alpha}",
    },
    TypoEntry {
        quantity: Quantity::CohXphi,
        literal: "<X_phi> = |lambda|^2/sqrt2 {(1+|w|^2)|alpha| cos(phi-theta) + s cos phi Re w + 1/2 e^{-s^2/2} Re[e^{2is Im alpha}(1-w)(1+w*)(2r cos(vartheta-phi) + is sin phi)]}",
        corrected: "|lambda|^2/sqrt2 {2(1+|w|^2) r cos(vartheta-phi) + 2s cos phi Re w + e^{-s^2/2} Re[e^{2is Im alpha}(1-w)(1+w*)(2r cos(vartheta-phi) + is sin phi)]}",
    },
    TypoEntry {
        quantity: Quantity::CohA2,
        literal: "<a^2> = |lambda|^2/4 {|1+w|^2(alpha+s/2)^2 + |1-w|^2(alpha-s/2)^2 + C(alpha-s/2)^2 + C*(alpha+s/2)^2}",
        corrected: "prefactor |lambda|^2/2",
    },
    TypoEntry {
        quantity: Quantity::SqAmp,
        literal: "<n|s/2,xi> = ... H_n[chi (e^{i delta} sinh 2r)^{-1/2}]",
        corrected: "H_n[chi (e^{i delta} sinh 2eta)^{-1/2}]",
    },
    TypoEntry {
        quantity: Quantity::SqMeanN,
        literal: "I = E(sinh^2 eta + s^2/4 - s^2/2 (1 + i sin delta sinh 2eta)) entering as 2Re[(1-w)(1+w)* I]",
        corrected: "2(1-|w|^2) E[sinh^2 eta - s^2 sinh^2 eta (cosh 2eta + sinh 2eta cos delta) - s^2(1/2 sinh 2eta cos delta + sinh^2 eta) - s^2/4]",
    },
    TypoEntry {
        quantity: Quantity::SqXphi,
        literal: "s|kappa|^2/(4sqrt2) {cos phi |1+w|^2 - cos phi |1+w|^2 + 2E Re[e^{-i theta}(1+w)(1-w)* F] - 2E Re[e^{i theta}(1+w)*(1-w) F]}",
        corrected: "s|kappa|^2/(4sqrt2) {cos phi |1+w|^2 - cos phi |1-w|^2 + 2E Re[e^{-i phi}(1+w)(1-w)* F] - 2E Re[e^{-i phi}(1+w)*(1-w) F]}",
    },
    TypoEntry {
        quantity: Quantity::SqX2,
        literal: "II = |kappa|^2/4 {(s^2/4 - 1/2 sinh 2eta e^{-i delta})(|1+w|^2 + |1-w|^2) + (1-|w|^2) III}, III with e^{-i delta} and e^{-2i delta}",
        corrected: "II = |kappa|^2/4 {(s^2/4 - mu nu)(|1+w|^2 + |1-w|^2) + 2(1-|w|^2) E[s^2/4 - mu nu + s^2(mu nu + sinh^2 eta) + s^2 nu^2 (mu + nu*)^2]}, nu = e^{i delta} sinh eta",
    },
    TypoEntry {
        quantity: Quantity::CatA2A2,
        literal: "|1-w|^2 bracket term e^{-i omega} e^{-2|alpha|^2}(alpha* + s/2)(alpha - s/2)^2",
        corrected: "e^{-i omega} e^{-2|alpha|^2}(alpha* + s/2)^2 (alpha - s/2)^2",
    },
    TypoEntry {
        quantity: Quantity::CatAmean,
        literal: "<a> with phases e^{i phi}, e^{-i phi}",
        corrected: "phases e^{i omega}, e^{-i omega}",
    },
    TypoEntry {
        quantity: Quantity::CatA2,
        literal: "<a^2> interference terms 2e^{-s^2/4}(cos(2s Im alpha)(alpha^2 + s^2/4) - is alpha sin(2s Im alpha))",
        corrected: "2e^{-s^2/2}(cos(2s Im alpha)(alpha^2 + s^2/4) - is alpha sin(2s Im alpha))",
    },
    TypoEntry {
        quantity: Quantity::CatInitSphi,
        literal: "S_phi = r^2 e^{-4r^2}/(1+x)^2 [1 + (cos 2phi (e^{2r^2} + cos omega)^2 + sin^2 omega cos^2 phi - 1)]",
        corrected: "r^2 e^{-4r^2}/(1+x)^2 [e^{4r^2} + cos 2(phi-delta)(e^{2r^2} + cos omega)^2 + sin^2 omega cos 2(phi-delta) - 1]",
    },
];

/// How a catalogued misprint fared over a set of reports.
#[derive(Clone, Debug, PartialEq)]
pub struct TypoEvidence {
    pub entry: TypoEntry,
    pub points: usize,
    pub literal_matches: usize,
    pub typo_suspected: usize,
    pub failed: usize,
    pub max_literal_err: f64,
    pub max_corrected_err: f64,
}

pub fn typo_evidence(reports: &[ClosedFormReport]) -> Vec<TypoEvidence> {
    TYPOS
        .iter()
        .map(|entry| {
            let mut ev = TypoEvidence {
                entry: *entry,
                points: 0,
                literal_matches: 0,
                typo_suspected: 0,
                failed: 0,
                max_literal_err: 0.0,
                max_corrected_err: 0.0,
            };
            for r in reports.iter().filter(|r| r.quantity == entry.quantity) {
                ev.points += 1;
                match r.status {
                    Status::Match => ev.literal_matches += 1,
                    Status::TypoSuspected => ev.typo_suspected += 1,
                    Status::Fail => ev.failed += 1,
                }
                // non-finite literal values count as unbounded error
                let lit = if r.abs_err.is_finite() { r.abs_err } else { f64::INFINITY };
                ev.max_literal_err = ev.max_literal_err.max(lit);
                ev.max_corrected_err = ev.max_corrected_err.max(r.corrected_err.unwrap_or(f64::NAN));
            }
            ev
        })
        .collect()
}

//! JSON documents for reports, families and counterexamples. Elements are
//! coordinate arrays; absent optional values are `null`.

use serde::{Deserialize, Serialize};
use sumgraph_core::{Element, FamilyEntry, GSubset, GroupSpec, KappaReport, Subgroup};

pub type Coords = Vec<usize>;

pub fn element_coords(group: &GroupSpec, e: Element) -> Coords {
    group.coords(e)
}

pub fn set_coords(group: &GroupSpec, s: &GSubset) -> Vec<Coords> {
    s.iter().map(|e| group.coords(e)).collect()
}

pub fn subset_from_coords(group: &GroupSpec, coords: &[Coords]) -> sumgraph_core::Result<GSubset> {
    let mut s = group.empty_set();
    for c in coords {
        s.insert(group.element(c)?);
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub subgroup: Vec<Coords>,
    #[serde(rename = "G0")]
    pub g0_subgroup: Option<Vec<Coords>>,
    pub g0: Option<Coords>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FragmentDoc {
    pub vertices: Vec<Coords>,
    pub boundary: Vec<Coords>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub group: Vec<usize>,
    pub subset: Vec<Coords>,
    pub kappa: usize,
    pub branch: String,
    pub eta: Option<usize>,
    pub lambda: Option<usize>,
    pub lambda_star: Option<usize>,
    pub witness: Option<WitnessDoc>,
    pub fragment: Option<FragmentDoc>,
    /// Present only when the oracle was run alongside the formula.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

fn members(group: &GroupSpec, h: &Subgroup) -> Vec<Coords> {
    set_coords(group, h.members())
}

impl WitnessDoc {
    pub fn from_entry(group: &GroupSpec, entry: &FamilyEntry) -> Self {
        WitnessDoc {
            subgroup: members(group, &entry.subgroup),
            g0_subgroup: entry.witness.as_ref().map(|w| members(group, &w.g0_subgroup)),
            g0: entry.witness.as_ref().map(|w| element_coords(group, w.g0)),
        }
    }
}

impl ReportDoc {
    pub fn new(group: &GroupSpec, s: &GSubset, report: &KappaReport) -> Self {
        ReportDoc {
            group: group.factors().to_vec(),
            subset: set_coords(group, s),
            kappa: report.kappa,
            branch: report.branch.as_str().to_string(),
            eta: report.eta,
            lambda: report.lambda,
            lambda_star: report.lambda_star,
            witness: report.witness.as_ref().map(|e| WitnessDoc::from_entry(group, e)),
            fragment: report.fragment.as_ref().map(|f| FragmentDoc {
                vertices: set_coords(group, &f.vertices),
                boundary: set_coords(group, &f.boundary),
            }),
            oracle: None,
            agree: None,
        }
    }

    pub fn with_oracle(mut self, oracle: usize) -> Self {
        self.agree = Some(oracle == self.kappa);
        self.oracle = Some(oracle);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report documents always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub subgroup: Vec<Coords>,
    pub score: usize,
    #[serde(rename = "G0")]
    pub g0_subgroup: Option<Vec<Coords>>,
    pub g0: Option<Coords>,
}

impl EntryDoc {
    pub fn new(group: &GroupSpec, entry: &FamilyEntry) -> Self {
        let w = WitnessDoc::from_entry(group, entry);
        EntryDoc {
            subgroup: w.subgroup,
            score: entry.score,
            g0_subgroup: w.g0_subgroup,
            g0: w.g0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesDoc {
    pub group: Vec<usize>,
    pub subset: Vec<Coords>,
    #[serde(rename = "H")]
    pub h: Vec<EntryDoc>,
    #[serde(rename = "L")]
    pub l: Vec<EntryDoc>,
    #[serde(rename = "L*")]
    pub lstar: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FragmentsDoc {
    pub group: Vec<usize>,
    pub subset: Vec<Coords>,
    pub kappa: usize,
    pub fragments: Vec<FragmentDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use sumgraph_core::connectivity::kappa_formula;
    use sumgraph_core::abelian_group::make_group;

    #[test]
    fn z8_report_document() {
        let g = make_group(&[8]).unwrap();
        let s = GSubset::from_indices(8, [1]);
        let doc = ReportDoc::new(&g, &s, &kappa_formula(&g, &s).unwrap());
        assert_eq!(
            doc.to_json(),
            r#"{"group":[8],"subset":[[1]],"kappa":0,"branch":"lambda-star","eta":null,"lambda":0,"lambda_star":0,"witness":{"subgroup":[[0]],"G0":[[0],[1],[2],[3],[4],[5],[6],[7]],"g0":[1]},"fragment":{"vertices":[[4],[5]],"boundary":[]}}"#
        );
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let g = make_group(&[4, 2]).unwrap();
        for m in 0u64..256 {
            let s = GSubset::from_mask(8, m);
            let mut doc = ReportDoc::new(&g, &s, &kappa_formula(&g, &s).unwrap());
            if m % 3 == 0 {
                let k = doc.kappa;
                doc = doc.with_oracle(k);
            }
            let text = doc.to_json();
            let back = ReportDoc::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), text);
            // Recomputing from the parsed group and subset reproduces the document.
            let g2 = GroupSpec::new(&back.group).unwrap();
            let s2 = subset_from_coords(&g2, &back.subset).unwrap();
            let again = ReportDoc::new(&g2, &s2, &kappa_formula(&g2, &s2).unwrap());
            assert_eq!(again.to_json(), ReportDoc { oracle: None, agree: None, ..back }.to_json());
        }
    }
}

//! Expected classification tables and their machine verification.
//!
//! The exceptional tables ship as a human-auditable text file embedded in
//! the crate (one row per table line); the classical families are generated
//! from the pattern keys and the index rule `(k,l) ↔ (k, n−2k−l)` instead of
//! being stored per rank; dihedral tables are generated from the closed-form
//! pairing.  `verify` recomputes the classification with the independent
//! oracles and matches it line by line, never mutating the expected data.

use std::fmt;

use crate::error::{Error, Result};
use crate::involutions::{classify, w0_pairing, Classification, PatternKey};
use crate::rootsys::{DiagramType, NodeSet, RootSystem};
use crate::weyl::{Budgets, Mode, SubgroupSpec};

/// Where a table entry comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Transcribed from the published table.
    Published,
    /// Recomputed here; the string says why.
    Computed(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Published => write!(f, "published"),
            Provenance::Computed(reason) => write!(f, "computed: {reason}"),
        }
    }
}

/// One pairing line: the classes of `left` and `right` correspond under
/// multiplication by the longest element; `right = None` marks a self-paired
/// class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenLine {
    pub line_no: usize,
    pub left: Vec<NodeSet>,
    pub right: Option<Vec<NodeSet>>,
    pub provenance: Provenance,
}

/// The expected table for one diagram type.
#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub diagram: DiagramType,
    pub spec: SubgroupSpec,
    pub lines: Vec<GoldenLine>,
    /// Flags the reader should see alongside the table.
    pub notes: Vec<String>,
}

fn spec_from_label(label: &str) -> Result<SubgroupSpec> {
    match label {
        "full" => Ok(SubgroupSpec::Full),
        "wo" => Ok(SubgroupSpec::CentralizerW0),
        other => Err(Error::GoldenFormat(format!("unknown spec `{other}`"))),
    }
}

fn parse_subsets(field: &str) -> Result<Vec<NodeSet>> {
    field.split(';').map(|s| s.trim().parse()).collect()
}

/// Parse the golden file format: `type | spec | line | left | right | prov`.
pub fn parse_tables(text: &str) -> Result<Vec<GoldenTable>> {
    let mut tables: Vec<GoldenTable> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('|').map(str::trim).collect();
        if fields.len() != 6 {
            return Err(Error::GoldenFormat(format!(
                "line {}: expected 6 `|`-separated fields",
                lineno + 1
            )));
        }
        let diagram: DiagramType = fields[0].parse()?;
        let spec = spec_from_label(fields[1])?;
        let line_no: usize = fields[2]
            .parse()
            .map_err(|_| Error::GoldenFormat(format!("line {}: bad line number", lineno + 1)))?;
        let left = parse_subsets(fields[3])?;
        let right = if fields[4] == "SELF" { None } else { Some(parse_subsets(fields[4])?) };
        let provenance = if fields[5] == "published" {
            Provenance::Published
        } else if let Some(reason) = fields[5].strip_prefix("computed:") {
            Provenance::Computed(reason.trim().to_string())
        } else {
            return Err(Error::GoldenFormat(format!("line {}: bad provenance", lineno + 1)));
        };
        let entry = GoldenLine { line_no, left, right, provenance };
        match tables.iter_mut().find(|t| t.diagram == diagram) {
            Some(t) => {
                if t.spec != spec {
                    return Err(Error::GoldenFormat(format!(
                        "line {}: table {diagram} mixes subgroup specs",
                        lineno + 1
                    )));
                }
                t.lines.push(entry);
            }
            None => tables.push(GoldenTable { diagram, spec, lines: vec![entry], notes: vec![] }),
        }
    }
    Ok(tables)
}

/// Serialize tables back to the file format, byte-stable.
pub fn serialize_tables(tables: &[GoldenTable]) -> String {
    let mut out = String::new();
    for t in tables {
        for l in &t.lines {
            let left =
                l.left.iter().map(NodeSet::to_string).collect::<Vec<_>>().join(";");
            let right = match &l.right {
                None => "SELF".to_string(),
                Some(rs) => rs.iter().map(NodeSet::to_string).collect::<Vec<_>>().join(";"),
            };
            out.push_str(&format!(
                "{} | {} | {} | {} | {} | {}\n",
                t.diagram,
                match t.spec {
                    SubgroupSpec::Full => "full",
                    SubgroupSpec::CentralizerW0 => "wo",
                    SubgroupSpec::SigmaFixed(_) => "sigma",
                },
                l.line_no,
                left,
                right,
                l.provenance
            ));
        }
    }
    out
}

const EMBEDDED: &str = include_str!("tables.txt");

/// The subgroup in which each type's table classifies involutions.
pub fn table_spec(t: DiagramType) -> SubgroupSpec {
    if t.w0_is_central() {
        SubgroupSpec::Full
    } else {
        SubgroupSpec::CentralizerW0
    }
}

/// The expected table for a diagram type: embedded data for the exceptional
/// types, generated data for the classical families and dihedral types.
pub fn expected_table(t: DiagramType) -> Result<GoldenTable> {
    expected_table_with(t, None)
}

/// As [`expected_table`], optionally overriding the embedded exceptional
/// tables with an external golden file.
pub fn expected_table_with(t: DiagramType, file_text: Option<&str>) -> Result<GoldenTable> {
    let t = t.validate()?;
    match t {
        DiagramType::E(_) | DiagramType::F4 | DiagramType::H(_) => {
            let tables = parse_tables(file_text.unwrap_or(EMBEDDED))?;
            tables
                .into_iter()
                .find(|tab| tab.diagram == t)
                .ok_or_else(|| Error::NotTabulated(t.to_string()))
        }
        DiagramType::A(1) => Ok(GoldenTable {
            diagram: t,
            spec: SubgroupSpec::Full,
            lines: vec![GoldenLine {
                line_no: 1,
                left: vec![NodeSet::empty()],
                right: Some(vec![NodeSet::full(1)]),
                provenance: Provenance::Computed("rank-1 base case".to_string()),
            }],
            notes: vec![],
        }),
        DiagramType::A(_) | DiagramType::B(_) | DiagramType::C(_) => classical_table(t),
        DiagramType::D(r) if r % 2 == 1 => classical_table(t),
        DiagramType::D(_) => d_even_table(t),
        DiagramType::G2(n) => Ok(dihedral_table(n)),
    }
}

/// Pairing lines for a family in which every pattern key names a distinct
/// class: A (centralizer), BC (full) and odd D (centralizer).
fn classical_table(t: DiagramType) -> Result<GoldenTable> {
    let keys = PatternKey::family(t)?;
    let odd_a_reason = "central block read as 2l-1 nodes; the printed min{2l-1,0} is degenerate";
    let mut lines = Vec::new();
    let mut used: Vec<PatternKey> = Vec::new();
    for key in &keys {
        if used.contains(key) {
            continue;
        }
        let partner = key.dagger()?;
        used.push(*key);
        used.push(partner);
        let provenance = match key {
            PatternKey::AOdd { l, .. } if *l >= 1 => {
                Provenance::Computed(odd_a_reason.to_string())
            }
            PatternKey::AOdd { .. } => match partner {
                PatternKey::AOdd { l, .. } if l >= 1 => {
                    Provenance::Computed(odd_a_reason.to_string())
                }
                _ => Provenance::Published,
            },
            _ => Provenance::Published,
        };
        lines.push(GoldenLine {
            line_no: lines.len() + 1,
            left: vec![key.nodes()?],
            right: if partner == *key { None } else { Some(vec![partner.nodes()?]) },
            provenance,
        });
    }
    Ok(GoldenTable { diagram: t, spec: table_spec(t), lines, notes: vec![] })
}

/// Even D: classes are the keys with odd `l` (which absorb `l+1`) together
/// with `l = 0`, plus the two spin classes whose pairing obeys the mod-4
/// rule.
fn d_even_table(t: DiagramType) -> Result<GoldenTable> {
    let DiagramType::D(rank) = t else { unreachable!() };
    let n = rank - 1;
    let canonical = |k: usize, l: usize| -> (usize, usize) {
        if l >= 2 && l.is_multiple_of(2) {
            (k, l - 1)
        } else {
            (k, l)
        }
    };
    let reps = |k: usize, l: usize| -> Result<Vec<NodeSet>> {
        let mut out = vec![PatternKey::D { n, k, l }.nodes()?];
        if l % 2 == 1 && (PatternKey::D { n, k, l: l + 1 }).validate().is_ok() {
            out.push(PatternKey::D { n, k, l: l + 1 }.nodes()?);
        }
        Ok(out)
    };
    let mut lines = Vec::new();
    let mut used: Vec<(usize, usize)> = Vec::new();
    for l in 0..=n {
        if l >= 2 && l % 2 == 0 {
            continue;
        }
        for k in 0..=(n - l) / 2 {
            if used.contains(&(k, l)) {
                continue;
            }
            let partner = canonical(k, n - 2 * k - l);
            used.push((k, l));
            used.push(partner);
            lines.push(GoldenLine {
                line_no: lines.len() + 1,
                left: reps(k, l)?,
                right: if partner == (k, l) { None } else { Some(reps(partner.0, partner.1)?) },
                provenance: Provenance::Published,
            });
        }
    }
    let m = rank / 2;
    let c_minus = PatternKey::SpinMinus { m }.nodes()?;
    let c_plus = PatternKey::SpinPlus { m }.nodes()?;
    if rank % 4 == 0 {
        for spin in [c_minus, c_plus] {
            lines.push(GoldenLine {
                line_no: lines.len() + 1,
                left: vec![spin],
                right: None,
                provenance: Provenance::Published,
            });
        }
    } else {
        lines.push(GoldenLine {
            line_no: lines.len() + 1,
            left: vec![c_minus],
            right: Some(vec![c_plus]),
            provenance: Provenance::Published,
        });
    }
    Ok(GoldenTable { diagram: t, spec: SubgroupSpec::Full, lines, notes: vec![] })
}

/// Dihedral tables.  The reflection-class pairing for even gonality is
/// stored as computed — swap exactly when n ≡ 2 (mod 4) — because the two
/// published even-gonality boxes carry the transposed assignment.
fn dihedral_table(n: usize) -> GoldenTable {
    let t = DiagramType::G2(n);
    let whole = NodeSet::full(2);
    let s1: NodeSet = "{1}".parse().unwrap();
    let s2: NodeSet = "{2}".parse().unwrap();
    let mut lines = vec![GoldenLine {
        line_no: 1,
        left: vec![NodeSet::empty()],
        right: Some(vec![whole]),
        provenance: Provenance::Published,
    }];
    let mut notes = Vec::new();
    if n.is_multiple_of(2) {
        let reason = "brute-force pairing of the reflection classes: swap exactly when n ≡ 2 (mod 4)";
        if n.is_multiple_of(4) {
            for s in [s1, s2] {
                lines.push(GoldenLine {
                    line_no: lines.len() + 1,
                    left: vec![s],
                    right: None,
                    provenance: Provenance::Computed(reason.to_string()),
                });
            }
        } else {
            lines.push(GoldenLine {
                line_no: 2,
                left: vec![s1],
                right: Some(vec![s2]),
                provenance: Provenance::Computed(reason.to_string()),
            });
        }
        notes.push(format!(
            "the published even-gonality boxes assign the transposed pairing: for n = {n} \
             direct computation gives `{}`; the table above records the computed result",
            if n.is_multiple_of(4) { "both reflection classes self-paired" } else { "the two reflection classes swapped" },
        ));
    }
    GoldenTable { diagram: t, spec: table_spec(t), lines, notes }
}

/// Outcome of checking one golden line.
#[derive(Clone, Debug)]
pub struct LineResult {
    pub line_no: usize,
    pub pass: bool,
    pub provenance: Provenance,
    pub details: Vec<String>,
}

/// Full verification report for one type.
pub struct VerifyReport {
    pub diagram: DiagramType,
    pub spec: SubgroupSpec,
    pub mode: Mode,
    pub lines: Vec<LineResult>,
    /// Classes found by classification but absent from the table, and table
    /// classes referenced more than once.
    pub coverage_errors: Vec<String>,
    pub notes: Vec<String>,
    pub classification: Classification,
    pub pairing: Vec<usize>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.lines.iter().all(|l| l.pass) && self.coverage_errors.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify {} ({}, {} classes)",
            self.diagram,
            self.spec.label(),
            self.classification.classes.len()
        )?;
        for l in &self.lines {
            writeln!(
                f,
                "  line ({}): {}{}",
                l.line_no,
                if l.pass { "PASS" } else { "FAIL" },
                if l.details.is_empty() {
                    String::new()
                } else {
                    format!(" — {}", l.details.join("; "))
                }
            )?;
        }
        for e in &self.coverage_errors {
            writeln!(f, "  coverage: FAIL — {e}")?;
        }
        if self.coverage_errors.is_empty() {
            writeln!(f, "  coverage: PASS — every class appears exactly once")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        writeln!(f, "  result: {}", if self.pass() { "PASS" } else { "FAIL" })
    }
}

/// Verify one type against its expected table: classify, compute the
/// pairing, and match every line.
pub fn verify(
    sys: &RootSystem,
    mode: Mode,
    budgets: &Budgets,
    golden_file: Option<&str>,
) -> Result<VerifyReport> {
    let table = expected_table_with(sys.diagram(), golden_file)?;
    let classification = classify(sys, &table.spec, mode, budgets)?;
    let pairing = w0_pairing(sys, &classification)?;

    let mut lines = Vec::new();
    let mut seen_classes: Vec<usize> = Vec::new();
    for line in &table.lines {
        let mut details = Vec::new();
        let mut pass = true;

        let locate = |reps: &[NodeSet], side: &str, details: &mut Vec<String>| -> Option<usize> {
            let mut found: Option<usize> = None;
            for r in reps {
                match classification.class_of_subset(*r) {
                    None => {
                        details.push(format!("{side} subset {r} not among the scanned candidates"));
                        return None;
                    }
                    Some(c) => match found {
                        None => found = Some(c),
                        Some(prev) if prev != c => {
                            details.push(format!(
                                "{side} subsets split across classes ({} vs {})",
                                classification.classes[prev].canonical_subset(),
                                classification.classes[c].canonical_subset()
                            ));
                            return None;
                        }
                        _ => {}
                    },
                }
            }
            found
        };

        let left = locate(&line.left, "left", &mut details);
        let right = match &line.right {
            None => left,
            Some(reps) => locate(reps, "right", &mut details),
        };
        match (left, right) {
            (Some(l), Some(r)) => {
                seen_classes.push(l);
                if line.right.is_some() {
                    if l == r {
                        pass = false;
                        details.push("printed as a pair but both sides are one class".into());
                    } else {
                        seen_classes.push(r);
                    }
                }
                if pairing[l] != r {
                    pass = false;
                    details.push(format!(
                        "pairing sends {} to {}, table expects {}",
                        classification.classes[l].canonical_subset(),
                        classification.classes[pairing[l]].canonical_subset(),
                        classification.classes[r].canonical_subset()
                    ));
                }
            }
            _ => pass = false,
        }
        lines.push(LineResult { line_no: line.line_no, pass, provenance: line.provenance.clone(), details });
    }

    let mut coverage_errors = Vec::new();
    for (i, c) in classification.classes.iter().enumerate() {
        match seen_classes.iter().filter(|&&x| x == i).count() {
            0 => coverage_errors.push(format!(
                "computed class {} (dim⁻ {}) missing from the table",
                c.canonical_subset(),
                c.dim_minus
            )),
            1 => {}
            k => coverage_errors.push(format!(
                "class {} referenced {k} times across the table",
                c.canonical_subset()
            )),
        }
    }

    Ok(VerifyReport {
        diagram: sys.diagram(),
        spec: table.spec.clone(),
        mode: classification.mode,
        lines,
        coverage_errors,
        notes: table.notes.clone(),
        classification,
        pairing,
    })
}

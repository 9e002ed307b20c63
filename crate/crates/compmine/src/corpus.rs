//! Annotated-sentence data model and the canonical corpus file format.
//!
//! A corpus file is UTF-8 text with one token per line, sentences separated
//! by a single blank line. Each line has either three tab-separated columns
//! (`token<TAB>penn_pos<TAB>label`) or two (`token<TAB>label`). Labels are
//! exactly `Product1`, `Product2`, `Aspect`, `Predicate` or `None`. Labels
//! carry no BIO prefix; entity spans are recovered as maximal runs of
//! identical non-`None` labels, which means two adjacent distinct entities
//! of the same label cannot be told apart.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::preproc::{self, UposTag};

/// Per-token target label. The declaration order fixes the class index used
/// by the model head and by the argmax tie-break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Product1,
    Product2,
    Aspect,
    Predicate,
    None,
}

impl Label {
    /// All five labels in class-index order.
    pub const ALL: [Label; 5] = [
        Label::Product1,
        Label::Product2,
        Label::Aspect,
        Label::Predicate,
        Label::None,
    ];

    /// The four entity-bearing labels, i.e. everything but `None`.
    pub const ENTITIES: [Label; 4] = [
        Label::Product1,
        Label::Product2,
        Label::Aspect,
        Label::Predicate,
    ];

    pub fn index(self) -> usize {
        match self {
            Label::Product1 => 0,
            Label::Product2 => 1,
            Label::Aspect => 2,
            Label::Predicate => 3,
            Label::None => 4,
        }
    }

    pub fn from_index(index: usize) -> Option<Label> {
        Label::ALL.get(index).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::Product1 => "Product1",
            Label::Product2 => "Product2",
            Label::Aspect => "Aspect",
            Label::Predicate => "Predicate",
            Label::None => "None",
        }
    }

    /// True for every label except `None`.
    pub fn is_entity(self) -> bool {
        self != Label::None
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "Product1" => Ok(Label::Product1),
            "Product2" => Ok(Label::Product2),
            "Aspect" => Ok(Label::Aspect),
            "Predicate" => Ok(Label::Predicate),
            "None" => Ok(Label::None),
            other => Err(format!("unknown label `{other}`")),
        }
    }
}

/// A single token with optional Penn Treebank and universal POS tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// Surface form; never empty and never contains whitespace.
    pub text: String,
    /// Penn Treebank tag, when known (from a 3-column corpus file or the
    /// heuristic tagger).
    pub penn_pos: Option<String>,
    /// Universal POS tag, derived from `penn_pos`; required for encoding.
    pub upos: Option<UposTag>,
}

impl Token {
    /// Builds a bare token, rejecting empty text and embedded whitespace.
    pub fn new(text: impl Into<String>) -> Result<Token> {
        let text = text.into();
        if text.is_empty() {
            return Err(Error::Parse {
                line: 0,
                msg: "empty token".into(),
            });
        }
        if text.chars().any(char::is_whitespace) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("token `{text}` contains whitespace"),
            });
        }
        Ok(Token {
            text,
            penn_pos: None,
            upos: None,
        })
    }

    pub fn with_pos(mut self, penn: impl Into<String>) -> Token {
        self.penn_pos = Some(penn.into());
        self
    }
}

/// An aligned sequence of tokens and labels; the universal exchange unit.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledSentence {
    tokens: Vec<Token>,
    labels: Vec<Label>,
}

impl LabeledSentence {
    /// Pairs tokens with labels. Fails unless both sequences have the same
    /// nonzero length.
    pub fn new(tokens: Vec<Token>, labels: Vec<Label>) -> Result<LabeledSentence> {
        if tokens.is_empty() {
            return Err(Error::Shape("sentence must contain at least one token".into()));
        }
        if tokens.len() != labels.len() {
            return Err(Error::Shape(format!(
                "{} tokens but {} labels",
                tokens.len(),
                labels.len()
            )));
        }
        Ok(LabeledSentence { tokens, labels })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Mutable token access for POS annotation; the token count is fixed.
    pub fn tokens_mut(&mut self) -> &mut [Token] {
        &mut self.tokens
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least one token
    }

    /// Maximal runs of identical non-`None` labels, left to right.
    pub fn entity_spans(&self) -> Vec<EntitySpan> {
        let mut spans = Vec::new();
        let mut run_start: Option<(usize, Label)> = None;
        for (i, &label) in self.labels.iter().enumerate() {
            match run_start {
                Some((start, current)) if label != current => {
                    if current.is_entity() {
                        spans.push(EntitySpan {
                            start,
                            end: i,
                            label: current,
                        });
                    }
                    run_start = Some((i, label));
                }
                None => run_start = Some((i, label)),
                _ => {}
            }
        }
        if let Some((start, current)) = run_start {
            if current.is_entity() {
                spans.push(EntitySpan {
                    start,
                    end: self.labels.len(),
                    label: current,
                });
            }
        }
        spans
    }
}

/// A maximal run of tokens sharing one non-`None` label.
/// `start` is inclusive, `end` exclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EntitySpan {
    pub start: usize,
    pub end: usize,
    pub label: Label,
}

/// A collection of labeled sentences with a provenance tag such as
/// `"weak"` or `"manual"`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    sentences: Vec<LabeledSentence>,
    provenance: String,
}

impl Dataset {
    pub fn new(sentences: Vec<LabeledSentence>, provenance: impl Into<String>) -> Result<Dataset> {
        let provenance = provenance.into();
        if provenance.is_empty() {
            return Err(Error::Config("dataset provenance must be non-empty".into()));
        }
        Ok(Dataset {
            sentences,
            provenance,
        })
    }

    pub fn sentences(&self) -> &[LabeledSentence] {
        &self.sentences
    }

    pub fn sentences_mut(&mut self) -> &mut [LabeledSentence] {
        &mut self.sentences
    }

    pub fn into_sentences(self) -> Vec<LabeledSentence> {
        self.sentences
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

/// Reads a corpus in the canonical tab-separated format.
///
/// One `LabeledSentence` per blank-line-delimited block; three columns are
/// `token / penn_pos / label`, two columns are `token / label` with no POS.
/// The resulting dataset has provenance `"file"`.
pub fn parse_corpus(text: &str) -> Result<Dataset> {
    let mut sentences = Vec::new();
    let mut tokens: Vec<Token> = Vec::new();
    let mut labels: Vec<Label> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim_end_matches('\r');
        if line.trim().is_empty() {
            if tokens.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "empty sentence block".into(),
                });
            }
            sentences.push(LabeledSentence::new(
                std::mem::take(&mut tokens),
                std::mem::take(&mut labels),
            )?);
            continue;
        }

        let cols: Vec<&str> = line.split('\t').collect();
        let (text_col, penn_col, label_col) = match cols.as_slice() {
            [t, l] => (*t, None, *l),
            [t, p, l] => (*t, Some(*p), *l),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected 2 or 3 tab-separated columns, got {}", cols.len()),
                })
            }
        };

        let mut token = Token::new(text_col).map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("invalid token `{text_col}`"),
        })?;
        if let Some(penn) = penn_col {
            if penn.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "empty POS column".into(),
                });
            }
            token.penn_pos = Some(penn.to_string());
        }
        let label = Label::from_str(label_col).map_err(|msg| Error::Parse {
            line: line_no,
            msg,
        })?;
        tokens.push(token);
        labels.push(label);
    }

    if !tokens.is_empty() {
        sentences.push(LabeledSentence::new(tokens, labels)?);
    }
    Dataset::new(sentences, "file")
}

/// Writes a dataset in the canonical format: each sentence block is
/// terminated by exactly one blank line. The empty dataset serializes to
/// the empty string. `parse_corpus` inverts this on tokens, POS and labels
/// (the derived `upos` field and the provenance tag are not stored).
pub fn serialize_corpus(dataset: &Dataset) -> String {
    let mut out = String::new();
    for sentence in dataset.sentences() {
        for (token, label) in sentence.tokens().iter().zip(sentence.labels()) {
            out.push_str(&token.text);
            out.push('\t');
            if let Some(penn) = &token.penn_pos {
                out.push_str(penn);
                out.push('\t');
            }
            out.push_str(label.as_str());
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

/// Keeps exactly the sentences usable for training: token count at most 30
/// and at least one token with a comparative Penn tag. Order is preserved.
/// Every token of every sentence must already carry a Penn tag.
pub fn filter_trainable(dataset: &Dataset) -> Result<Dataset> {
    for (index, sentence) in dataset.sentences().iter().enumerate() {
        if sentence.tokens().iter().any(|t| t.penn_pos.is_none()) {
            return Err(Error::Sentence {
                index,
                msg: "missing Penn POS tag; run POS tagging first".into(),
            });
        }
    }
    let kept: Vec<LabeledSentence> = dataset
        .sentences()
        .iter()
        .filter(|s| {
            s.len() <= MAX_TRAINABLE_LEN
                && s.tokens()
                    .iter()
                    .any(|t| preproc::is_comparative(t.penn_pos.as_deref().unwrap_or("")))
        })
        .cloned()
        .collect();
    Dataset::new(kept, dataset.provenance())
}

/// Maximum sentence length (in tokens) retained by [`filter_trainable`].
pub const MAX_TRAINABLE_LEN: usize = 30;

/// Deterministically shuffles the sentences under `seed` and puts the first
/// `floor(n * train_fraction)` into the train split, the rest into test.
pub fn split_dataset(
    dataset: &Dataset,
    train_fraction: f64,
    seed: u64,
) -> Result<(Dataset, Dataset)> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset("nothing to split".into()));
    }
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::Config(format!(
            "train fraction must lie in (0,1), got {train_fraction}"
        )));
    }
    let mut order: Vec<usize> = (0..dataset.len()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);

    let train_size = (dataset.len() as f64 * train_fraction).floor() as usize;
    let train: Vec<LabeledSentence> = order[..train_size]
        .iter()
        .map(|&i| dataset.sentences()[i].clone())
        .collect();
    let test: Vec<LabeledSentence> = order[train_size..]
        .iter()
        .map(|&i| dataset.sentences()[i].clone())
        .collect();
    Ok((
        Dataset::new(train, dataset.provenance())?,
        Dataset::new(test, dataset.provenance())?,
    ))
}

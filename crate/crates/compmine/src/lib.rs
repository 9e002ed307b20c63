//! Extraction of the informing entities of comparative product reviews.
//!
//! A comparative review sentence such as "Nikon Coolpix has better image
//! quality than Cannon" carries up to four kinds of information: the two
//! products being compared, the aspect under comparison and the predicate
//! expressing the user's opinion. This crate labels every token of a
//! sentence with one of `Product1`, `Product2`, `Aspect`, `Predicate` or
//! `None` using a (Bi)LSTM tagger trained from scratch, and bootstraps
//! training data from raw reviews with a pattern-based weak labeler.
//!
//! The pieces:
//!
//! - [`corpus`]: the annotated-sentence data model, the tab-separated
//!   corpus format, corpus filtering and train/test splitting.
//! - [`preproc`]: tokenization, a heuristic lexicon+suffix POS tagger and
//!   the Penn-to-universal tag mapping.
//! - [`weak`]: dictionary- and pattern-based weak labeling of raw review
//!   sentences.
//! - [`embeddings`]: GloVe-format word vectors concatenated with a one-hot
//!   universal-POS block; frozen during training.
//! - [`model`]: the LSTM tagger itself: forward pass, cross-entropy loss,
//!   backpropagation through time, Adam updates, training loop, inference,
//!   checkpointing and finite-difference gradient checking.
//! - [`eval`]: token-level precision/recall/F1 for argument identification
//!   and argument classification.
//! - [`cli`]: the `compmine` command-line interface.

pub mod cli;
pub mod corpus;
pub mod embeddings;
pub mod error;
pub mod eval;
pub mod model;
pub mod preproc;
pub mod weak;

pub use error::{Error, Result};

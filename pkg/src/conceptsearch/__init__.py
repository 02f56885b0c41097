"""Personalized semantic search over a concept-space term vector database."""

from .classify import (
    CategoryAssignment,
    LinearClassifier,
    assign_categories,
    train_classifier,
)
from .clicklog import ClickLog
from .corpus import (
    CorpusStats,
    Document,
    default_stopwords,
    load_corpus,
    load_stopwords,
    tokenize,
)
from .docvec import DocVector, doc_vector, tfidf
from .engine import MODES, RankedResult, SearchEngine
from .evaluate import EvalReport, accuracy, dcg, ndcg, run_benchmark
from .index import InvertedIndex, base_score, build_index
from .personalize import (
    gender_flag,
    history_rerank,
    history_target_rank,
    personalize_score,
)
from .profiles import ProfileStore, ProfileVectors, UserProfile, profile_vectors
from .search import (
    CategoryWeightVector,
    QueryVector,
    ResultSet,
    category_weights,
    query_vector,
    search,
)
from .tvdb import (
    TVDB,
    ConceptSpace,
    TermVector,
    build_concept_space,
    build_tvdb,
    normalize_term_vector,
    raw_tightness,
)

__version__ = "0.1.0"

"""Feature assembly, classifiers, cross-validation and PCA.

Four classifiers are implemented from scratch so that every tie-break and
training schedule is pinned down and seeded runs are exactly repeatable:
nearest neighbors, Gaussian naive Bayes, a gain-ratio decision tree with
pessimistic post-pruning, and one-vs-one linear SVMs trained by hinge
subgradient descent.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from statistics import NormalDist

import numpy as np

from .metrics import METRIC_COLUMNS
from .motifs import MOTIF_FEATURE_NAMES

logger = logging.getLogger(__name__)

CLASSIFIER_KINDS = ("knn", "naive-bayes", "decision-tree", "linear-svm")


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    feature_names: tuple[str, ...]
    book_id: str
    author: str


@dataclass(frozen=True)
class FeatureMatrix:
    rows: tuple[FeatureVector, ...]

    @property
    def feature_names(self) -> tuple[str, ...]:
        return self.rows[0].feature_names

    @property
    def X(self) -> np.ndarray:
        return np.vstack([r.values for r in self.rows]).astype(np.float64)

    @property
    def y(self) -> tuple[str, ...]:
        return tuple(r.author for r in self.rows)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.y)))

    def __len__(self) -> int:
        return len(self.rows)

    def with_labels(self, authors) -> "FeatureMatrix":
        return FeatureMatrix(tuple(replace(r, author=a) for r, a in zip(self.rows, authors)))

    def validate(self) -> "FeatureMatrix":
        names = self.rows[0].feature_names
        for r in self.rows:
            if r.feature_names != names or len(r.values) != len(names):
                raise ValueError(f"feature mismatch on book {r.book_id!r}")
            if not np.all(np.isfinite(np.asarray(r.values, dtype=np.float64))):
                raise ValueError(f"non-finite feature value on book {r.book_id!r}")
        counts = Counter(self.y)
        if len(counts) < 2:
            raise ValueError("feature matrix needs at least 2 distinct labels")
        thin = sorted(a for a, c in counts.items() if c < 2)
        if thin:
            raise ValueError(f"labels with fewer than 2 rows: {', '.join(thin)}")
        return self

    @classmethod
    def from_arrays(cls, X, authors, feature_names=None, book_ids=None) -> "FeatureMatrix":
        X = np.asarray(X, dtype=np.float64)
        feature_names = tuple(feature_names or (f"f{i}" for i in range(X.shape[1])))
        book_ids = list(book_ids or (f"row{i}" for i in range(X.shape[0])))
        rows = tuple(
            FeatureVector(X[i].copy(), feature_names, book_ids[i], authors[i])
            for i in range(X.shape[0])
        )
        return cls(rows)


def motif_features(census) -> FeatureVector:
    """13 absolute motif counts in label order."""
    return FeatureVector(
        np.asarray(census.counts, dtype=np.float64),
        MOTIF_FEATURE_NAMES,
        census.book_id,
        "",
    )


def network_features(metrics_row: dict, book_id: str = "", author: str = "") -> FeatureVector:
    """The 13 summarized network statistics in METRIC_COLUMNS order.

    An undefined assortativity is encoded as 0 with a logged warning.
    """
    values = []
    for col in METRIC_COLUMNS:
        v = metrics_row[col]
        if v is None:
            logger.warning("book %r: undefined assortativity encoded as 0", book_id)
            v = 0.0
        values.append(float(v))
    return FeatureVector(np.array(values), METRIC_COLUMNS, book_id, author)


def top_word_features(streams, authors, n_words: int = 20) -> FeatureMatrix:
    """Relative frequencies of the corpus-wide most frequent words.

    Columns are the n_words words with the highest total count over all
    streams, in descending frequency (ties broken lexicographically); each
    cell is occurrences divided by the stream's token count.
    """
    totals = Counter()
    per_book = []
    for stream in streams:
        counts = Counter(stream.tokens)
        totals.update(counts)
        per_book.append(counts)
    if len(totals) < n_words:
        raise ValueError(f"corpus has only {len(totals)} distinct words, need {n_words}")
    ranked = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))[:n_words]
    words = tuple(w for w, _ in ranked)
    rows = []
    for stream, counts, author in zip(streams, per_book, authors):
        total = len(stream.tokens)
        values = np.array([counts.get(w, 0) / total for w in words])
        rows.append(FeatureVector(values, words, stream.book_id, author))
    return FeatureMatrix(tuple(rows))


@dataclass(frozen=True)
class ClassifierSpec:
    """A classifier kind plus the hyperparameters logged into every report."""

    kind: str
    k: int = 1
    var_floor: float = 1e-9
    min_leaf: int = 2
    max_depth: int | None = None
    prune_cf: float = 0.25
    penalty: float = 1.0
    epochs: int = 200

    def __post_init__(self):
        if self.kind not in CLASSIFIER_KINDS:
            raise ValueError(f"unknown classifier {self.kind!r}, expected one of {CLASSIFIER_KINDS}")

    def to_dict(self) -> dict:
        hyper = {
            "knn": {"k": self.k},
            "naive-bayes": {"var_floor": self.var_floor},
            "decision-tree": {"min_leaf": self.min_leaf, "max_depth": self.max_depth,
                              "prune_cf": self.prune_cf},
            "linear-svm": {"penalty": self.penalty, "epochs": self.epochs},
        }[self.kind]
        return {"kind": self.kind, **hyper}


# ---------------------------------------------------------------- classifiers

class KnnClassifier:
    def __init__(self, k: int = 1):
        self.k = k

    def fit(self, X, y, rng=None):
        self.X = np.asarray(X, dtype=np.float64)
        self.y = list(y)
        return self

    def predict(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        out = []
        for x in X:
            d = np.sqrt(((self.X - x) ** 2).sum(axis=1))
            order = np.argsort(d, kind="stable")[: self.k]
            votes = Counter(self.y[i] for i in order)
            top = max(votes.values())
            tied = [lab for lab, c in votes.items() if c == top]
            if len(tied) > 1:
                means = {
                    lab: np.mean([d[i] for i in order if self.y[i] == lab]) for lab in tied
                }
                low = min(means.values())
                tied = [lab for lab in tied if means[lab] == low]
            out.append(min(tied))
        return out


class GaussianNaiveBayes:
    def __init__(self, var_floor: float = 1e-9):
        self.var_floor = var_floor

    def fit(self, X, y, rng=None):
        X = np.asarray(X, dtype=np.float64)
        y = list(y)
        self.labels = sorted(set(y))
        n = len(y)
        self.mu = {}
        self.var = {}
        self.log_prior = {}
        for lab in self.labels:
            rows = X[[i for i, lab_i in enumerate(y) if lab_i == lab]]
            self.mu[lab] = rows.mean(axis=0)
            self.var[lab] = np.maximum(rows.var(axis=0), self.var_floor)
            self.log_prior[lab] = np.log(len(rows) / n)
        return self

    def predict(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        out = []
        for x in X:
            best_lab, best_ll = None, None
            for lab in self.labels:
                var = self.var[lab]
                ll = self.log_prior[lab] - 0.5 * float(
                    (np.log(2.0 * np.pi * var) + (x - self.mu[lab]) ** 2 / var).sum()
                )
                if best_ll is None or ll > best_ll:
                    best_lab, best_ll = lab, ll
            out.append(best_lab)
        return out


@dataclass
class _TreeNode:
    label: str
    counts: Counter
    feature: int = -1
    threshold: float = 0.0
    left: "_TreeNode | None" = None
    right: "_TreeNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None


def _entropy(counts, n):
    if n == 0:
        return 0.0
    p = np.array([c / n for c in counts.values() if c])
    return float(-(p * np.log2(p)).sum())


class C45Tree:
    """Binary decision tree: gain-ratio splits on numeric thresholds,
    post-pruned by the pessimistic error estimate."""

    def __init__(self, min_leaf: int = 2, max_depth: int | None = None, prune_cf: float = 0.25):
        self.min_leaf = min_leaf
        self.max_depth = max_depth
        self.prune_cf = prune_cf
        self._z = NormalDist().inv_cdf(1.0 - prune_cf)

    def fit(self, X, y, rng=None):
        X = np.asarray(X, dtype=np.float64)
        y = list(y)
        self.root = self._grow(X, y, depth=0)
        self._prune(self.root)
        return self

    def _majority(self, counts: Counter) -> str:
        top = max(counts.values())
        return min(lab for lab, c in counts.items() if c == top)

    def _grow(self, X, y, depth) -> _TreeNode:
        counts = Counter(y)
        node = _TreeNode(self._majority(counts), counts)
        n = len(y)
        if len(counts) == 1 or n < 2 * self.min_leaf:
            return node
        if self.max_depth is not None and depth >= self.max_depth:
            return node
        parent_h = _entropy(counts, n)
        best = None  # (ratio, feature, threshold)
        for f in range(X.shape[1]):
            col = X[:, f]
            values = np.unique(col)
            if values.size < 2:
                continue
            for a, b in zip(values, values[1:]):
                thr = (a + b) / 2.0
                mask = col <= thr
                nl = int(mask.sum())
                nr = n - nl
                if nl < self.min_leaf or nr < self.min_leaf:
                    continue
                hl = _entropy(Counter(lab for lab, m in zip(y, mask) if m), nl)
                hr = _entropy(Counter(lab for lab, m in zip(y, mask) if not m), nr)
                gain = parent_h - (nl * hl + nr * hr) / n
                if gain <= 1e-12:
                    continue
                pl, pr = nl / n, nr / n
                split_info = -(pl * np.log2(pl) + pr * np.log2(pr))
                ratio = gain / split_info
                if best is None or ratio > best[0] + 1e-12:
                    best = (ratio, f, thr)
        if best is None:
            return node
        _, f, thr = best
        mask = X[:, f] <= thr
        node.feature = f
        node.threshold = thr
        node.left = self._grow(X[mask], [lab for lab, m in zip(y, mask) if m], depth + 1)
        node.right = self._grow(X[~mask], [lab for lab, m in zip(y, mask) if not m], depth + 1)
        return node

    def _pessimistic(self, errors: float, n: float) -> float:
        # upper confidence bound on the leaf error rate, times n
        if n == 0:
            return 0.0
        z = self._z
        f = errors / n
        bound = (f + z * z / (2 * n) + z * np.sqrt(f / n - f * f / n + z * z / (4 * n * n))) / (
            1 + z * z / n
        )
        return n * bound

    def _prune(self, node: _TreeNode) -> float:
        n = sum(node.counts.values())
        leaf_est = self._pessimistic(n - node.counts[node.label], n)
        if node.is_leaf:
            return leaf_est
        subtree_est = self._prune(node.left) + self._prune(node.right)
        if leaf_est <= subtree_est + 1e-9:
            node.left = node.right = None
            node.feature = -1
            return leaf_est
        return subtree_est

    def predict(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        out = []
        for x in X:
            node = self.root
            while not node.is_leaf:
                node = node.left if x[node.feature] <= node.threshold else node.right
            out.append(node.label)
        return out


class LinearSvm:
    """One-vs-one linear max-margin classifiers, hinge subgradient descent
    with learning rate 1/(penalty * t) and an unregularized bias."""

    def __init__(self, penalty: float = 1.0, epochs: int = 200):
        self.penalty = penalty
        self.epochs = epochs

    def _train_pair(self, X, y_signed, rng):
        n, d = X.shape
        w = np.zeros(d)
        b = 0.0
        lam = self.penalty
        t = 0
        for _ in range(self.epochs):
            for i in rng.permutation(n):
                t += 1
                eta = 1.0 / (lam * t)
                margin = y_signed[i] * (X[i] @ w + b)
                w *= 1.0 - eta * lam
                if margin < 1.0:
                    w += eta * y_signed[i] * X[i]
                    b += eta * y_signed[i]
        return w, b

    def fit(self, X, y, rng=None):
        rng = rng or np.random.default_rng(0)
        X = np.asarray(X, dtype=np.float64)
        y = list(y)
        self.labels = sorted(set(y))
        self.machines = []
        for i, la in enumerate(self.labels):
            for lb in self.labels[i + 1:]:
                idx = [j for j, lab in enumerate(y) if lab in (la, lb)]
                signed = np.array([1.0 if y[j] == la else -1.0 for j in idx])
                w, b = self._train_pair(X[idx], signed, rng)
                self.machines.append((la, lb, w, b))
        return self

    def predict(self, X):
        X = np.atleast_2d(np.asarray(X, dtype=np.float64))
        out = []
        for x in X:
            votes = Counter()
            for la, lb, w, b in self.machines:
                votes[la if x @ w + b >= 0 else lb] += 1
            top = max(votes.values())
            out.append(min(lab for lab, c in votes.items() if c == top))
        return out


def make_classifier(spec: ClassifierSpec):
    if spec.kind == "knn":
        return KnnClassifier(spec.k)
    if spec.kind == "naive-bayes":
        return GaussianNaiveBayes(spec.var_floor)
    if spec.kind == "decision-tree":
        return C45Tree(spec.min_leaf, spec.max_depth, spec.prune_cf)
    return LinearSvm(spec.penalty, spec.epochs)


def classify(spec: ClassifierSpec, train: FeatureMatrix, test_rows, seed: int = 0):
    """Train on a feature matrix and predict labels for raw test rows."""
    if len(train) == 0:
        raise ValueError("empty training set")
    if len(set(train.y)) < 2:
        raise ValueError("training set needs at least 2 labels")
    rng = np.random.default_rng(seed)
    model = make_classifier(spec).fit(train.X, train.y, rng)
    return model.predict(np.asarray(test_rows, dtype=np.float64))


# ------------------------------------------------------------ cross-validation

@dataclass(frozen=True)
class CvResult:
    accuracy: float
    fold_accuracies: tuple[float, ...]
    confusion: np.ndarray  # labels x labels, rows true, cols predicted
    labels: tuple[str, ...]
    seed: int
    fold_assignment: tuple[tuple[int, ...], ...]
    stratified: bool
    classifier: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "fold_accuracies": list(self.fold_accuracies),
            "confusion": self.confusion.tolist(),
            "labels": list(self.labels),
            "seed": self.seed,
            "fold_assignment": [list(f) for f in self.fold_assignment],
            "stratified": self.stratified,
            "classifier": self.classifier,
        }


def assign_folds(y, folds: int, rng) -> tuple[list[np.ndarray], bool]:
    """Shuffled fold assignment, stratified when every label can fill a fold."""
    n = len(y)
    counts = Counter(y)
    if min(counts.values()) >= folds:
        per_label = {lab: [] for lab in sorted(counts)}
        for i in rng.permutation(n):
            per_label[y[i]].append(int(i))
        dealt = []
        for lab in sorted(per_label):
            dealt.extend(per_label[lab])
        assignment = [np.array(dealt[f::folds], dtype=np.int64) for f in range(folds)]
        return assignment, True
    perm = rng.permutation(n)
    return [np.sort(chunk) for chunk in np.array_split(perm, folds)], False


def drop_constant_columns(X, feature_names=None):
    """Remove globally zero-variance columns; returns (X, kept indices)."""
    keep = np.where(X.var(axis=0) > 0.0)[0]
    if keep.size < X.shape[1]:
        dropped = sorted(set(range(X.shape[1])) - set(keep.tolist()))
        names = [feature_names[i] for i in dropped] if feature_names else dropped
        logger.info("dropping %d zero-variance feature column(s): %s", len(dropped), names)
    return X[:, keep], keep


def cross_validate(matrix: FeatureMatrix, spec: ClassifierSpec, folds: int = 10,
                   seed: int = 42) -> CvResult:
    """Seeded k-fold evaluation with per-fold train-only standardization."""
    n = len(matrix)
    if folds < 2:
        raise ValueError(f"folds must be >= 2, got {folds}")
    if folds > n:
        raise ValueError(f"fold count {folds} exceeds row count {n}")
    y = matrix.y
    labels = matrix.labels
    if len(labels) < 2:
        raise ValueError("cross-validation needs at least 2 labels")
    X_all = matrix.X
    X_all, _ = drop_constant_columns(X_all, matrix.feature_names)

    rng = np.random.default_rng(seed)
    assignment, stratified = assign_folds(y, folds, rng)
    fold_seeds = [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(folds)]

    lab_index = {lab: i for i, lab in enumerate(labels)}
    confusion = np.zeros((len(labels), len(labels)), dtype=np.int64)
    fold_acc = []
    for f, test_idx in enumerate(assignment):
        train_idx = np.setdiff1d(np.arange(n), test_idx)
        mu = X_all[train_idx].mean(axis=0)
        sd = X_all[train_idx].std(axis=0)
        sd[sd == 0.0] = 1.0
        X_train = (X_all[train_idx] - mu) / sd
        X_test = (X_all[test_idx] - mu) / sd
        model = make_classifier(spec).fit(
            X_train, [y[i] for i in train_idx], np.random.default_rng(fold_seeds[f])
        )
        pred = model.predict(X_test)
        hits = 0
        for i, p in zip(test_idx, pred):
            confusion[lab_index[y[i]], lab_index[p]] += 1
            hits += p == y[i]
        fold_acc.append(hits / len(test_idx))
    accuracy = float(np.trace(confusion) / confusion.sum())
    return CvResult(
        accuracy=accuracy,
        fold_accuracies=tuple(fold_acc),
        confusion=confusion,
        labels=labels,
        seed=seed,
        fold_assignment=tuple(tuple(int(i) for i in f) for f in assignment),
        stratified=stratified,
        classifier=spec.to_dict(),
    )


def shuffled_label_baseline(matrix: FeatureMatrix, spec: ClassifierSpec, trials: int = 10,
                            folds: int = 10, seed: int = 42) -> float:
    """Mean accuracy when labels are redrawn uniformly from the label set.

    Each trial keeps the features and replaces every row label with a
    uniform draw (the correct author included), then runs the usual
    cross-validation; converges to 1/|labels| chance level.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    labels = matrix.labels
    rng = np.random.default_rng(seed)
    accs = []
    for t in range(trials):
        drawn = [labels[i] for i in rng.integers(0, len(labels), size=len(matrix))]
        while len(set(drawn)) < 2:  # retry the degenerate all-same draw
            drawn = [labels[i] for i in rng.integers(0, len(labels), size=len(matrix))]
        shuffled = matrix.with_labels(drawn)
        accs.append(cross_validate(shuffled, spec, folds=folds, seed=seed + 1 + t).accuracy)
    return float(np.mean(accs))


# ------------------------------------------------------------------------ PCA

@dataclass(frozen=True)
class PcaResult:
    coords: np.ndarray  # rows x components
    eigenvalues: np.ndarray  # all eigenvalues, descending
    components: np.ndarray  # kept columns x components
    kept_columns: tuple[int, ...]


def pca_project(matrix, components: int = 2) -> PcaResult:
    """Project z-scored features onto the top covariance eigenvectors.

    Zero-variance columns are dropped first; eigenvectors are ordered by
    descending eigenvalue and signed so the largest-magnitude loading of
    each component is positive.
    """
    X = matrix.X if isinstance(matrix, FeatureMatrix) else np.asarray(matrix, dtype=np.float64)
    if X.shape[0] < 2:
        raise ValueError("PCA needs at least 2 rows")
    names = matrix.feature_names if isinstance(matrix, FeatureMatrix) else None
    X, kept = drop_constant_columns(X, names)
    if components > X.shape[1]:
        raise ValueError(
            f"components {components} exceeds usable feature dimension {X.shape[1]}"
        )
    Z = (X - X.mean(axis=0)) / X.std(axis=0, ddof=1)
    cov = (Z.T @ Z) / (X.shape[0] - 1)
    eigvals, eigvecs = np.linalg.eigh(cov)
    order = np.argsort(eigvals)[::-1]
    eigvals = eigvals[order]
    eigvecs = eigvecs[:, order]
    V = eigvecs[:, :components].copy()
    for c in range(components):
        lead = np.argmax(np.abs(V[:, c]))
        if V[lead, c] < 0:
            V[:, c] = -V[:, c]
    return PcaResult(Z @ V, eigvals, V, tuple(int(i) for i in kept))

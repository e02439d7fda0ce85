"""Sparse SGD, averaged SGD and centered averaged SGD for L2-regularized linear models."""

from ._sparselin import (
    Algorithm,
    ConfigError,
    Dataset,
    DimensionError,
    EmptyDatasetError,
    Error,
    FormatError,
    IndexOrderError,
    LabelError,
    LinearModel,
    LossKind,
    NonFiniteError,
    ParseError,
    SparseVec,
    TouchCounter,
    TrainConfig,
    asgd_train,
    casgd_train,
    draw_indices,
    load_libsvm,
    load_model,
    loss_subgradient,
    loss_value,
    mean_vector,
    model_from_string,
    model_to_string,
    objective_value,
    parse_algorithm,
    parse_libsvm,
    parse_loss,
    predict,
    save_model,
    sgd_train,
    train,
)

__all__ = [name for name in dir() if not name.startswith("_")]

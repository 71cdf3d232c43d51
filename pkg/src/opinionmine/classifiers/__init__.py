from opinionmine.classifiers.base import LabeledDataset
from opinionmine.classifiers.knn import KNNModel, predict_knn, train_knn
from opinionmine.classifiers.naive_bayes import NBModel, predict_nb, train_nb
from opinionmine.classifiers.persistence import load_model, save_model
from opinionmine.classifiers.svm import SVMModel, predict_svm, train_svm

__all__ = [
    "LabeledDataset",
    "KNNModel",
    "NBModel",
    "SVMModel",
    "train_knn",
    "train_nb",
    "train_svm",
    "predict_knn",
    "predict_nb",
    "predict_svm",
    "save_model",
    "load_model",
]

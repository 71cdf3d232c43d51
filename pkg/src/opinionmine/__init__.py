"""Opinion mining for short social-media posts.

Tweet cleaning, term-document matrices, lexicon polarity/subjectivity
scoring, top-term extraction, and naive Bayes / k-NN / linear SVM
sentiment classifiers with confusion-matrix evaluation.
"""

__version__ = "0.1.0"

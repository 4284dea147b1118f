"""Exception hierarchy shared by every module."""


class BisynsetError(Exception):
    """Base class for all errors raised by this package."""


class LexiconError(BisynsetError):
    """Problem with an input dictionary or gold file."""


class MalformedLine(LexiconError):
    def __init__(self, line_no, detail=""):
        self.line_no = line_no
        msg = f"line {line_no}: malformed line"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class EmptyWord(LexiconError):
    def __init__(self, line_no):
        self.line_no = line_no
        super().__init__(f"line {line_no}: empty word field")


class InvalidUtf8(LexiconError):
    def __init__(self, offset):
        self.offset = offset
        super().__init__(f"invalid UTF-8 at byte offset {offset}")


class DuplicateSynsetId(LexiconError):
    def __init__(self, synset_id):
        self.synset_id = synset_id
        super().__init__(f"duplicate synset id {synset_id!r}")


class EmptySide(LexiconError):
    def __init__(self, synset_id):
        self.synset_id = synset_id
        super().__init__(f"synset {synset_id!r} has an empty language side")


class EmptyInput(BisynsetError):
    def __init__(self, what="input"):
        super().__init__(f"empty {what}")


class InvalidBound(BisynsetError):
    def __init__(self, k_max):
        self.k_max = k_max
        super().__init__(
            f"invalid cycle bound k={k_max}: the bound counts nodes and must be an "
            "even integer >= 4 (translation graphs are bipartite, so every cycle has "
            "an even number of nodes; an odd level bound such as 7 admits exactly the "
            "cycles of node bound 6)"
        )


class GraphTooLarge(BisynsetError):
    def __init__(self, node_count, limit):
        self.node_count = node_count
        super().__init__(f"graph has {node_count} nodes; brute force is limited to {limit}")


class UnknownPolicy(BisynsetError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown consolidation policy {name!r}")


class EmptySet(BisynsetError):
    """Cosine of an empty word set is undefined."""


class EmptyExtracted(BisynsetError):
    def __init__(self):
        super().__init__("no extracted synsets to score")


class EmptyGold(BisynsetError):
    def __init__(self):
        super().__init__("gold standard is empty")

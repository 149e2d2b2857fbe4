"""Exception types shared across the package.

Every error raised on a documented contract path derives from
:class:`SkillgrepError`, so callers (CLI, HTTP service) can map the whole
family to exit codes / status codes in one place.
"""


class SkillgrepError(Exception):
    """Base class for all package errors."""


class FileUnreadable(SkillgrepError):
    """An input file is missing or cannot be opened."""


class FormatError(SkillgrepError):
    """An input file's container or schema is malformed."""


class VersionMismatch(FormatError):
    """A binary artifact carries an unsupported format version."""


class DuplicateId(SkillgrepError):
    """Two ingested records share a posting id."""


class EmptySkill(SkillgrepError):
    """A skill surface string is empty after trimming."""


class EmptyTitle(SkillgrepError):
    """A job title is empty after trimming."""


class EmptyName(SkillgrepError):
    """A company name is empty after trimming."""


class EmptyCorpus(SkillgrepError):
    """No document survives indexing."""


class DomainError(SkillgrepError):
    """A numeric operation was called outside its precondition domain."""


class NoTitleNgrams(SkillgrepError):
    """A posting has no admitted title ngrams to average weights over."""


class UnknownSkill(SkillgrepError):
    """A skill string resolves to no lemma known to the dictionary/index."""


class UnknownIndustry(SkillgrepError):
    """No company in the store carries the requested industry label."""


class UnknownPosting(SkillgrepError):
    """A posting id is not present in the index."""


class StartupError(SkillgrepError):
    """Service configuration or artifact loading failed at startup."""

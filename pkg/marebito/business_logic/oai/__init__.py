from .metadata import build_oai_dc, build_zb_preview  # noqa: F401
from .repository import METADATA_FORMATS, OAI_NAMESPACE, OAIRepository, handle_oai  # noqa: F401
from .tokens import ResumptionToken  # noqa: F401

from .link_set import (  # noqa: F401
    LinkReject, LinkSet, LinkStats, build_link_set, link_stats, links_by_author, links_by_msc, load_links,
    save_links
)
from .scholix import SCHOLIX_VERSION, export_scholix, import_scholix  # noqa: F401

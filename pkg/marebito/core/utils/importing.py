from importlib import import_module


def import_from_string(fully_qualified_name: str):
    module_name, class_name = fully_qualified_name.rsplit('.', 1)
    module_ = import_module(module_name)
    return getattr(module_, class_name)


def instantiate_from_settings(class_settings: dict):
    """Build an object from a `{'class': 'dotted.path', 'kwargs': {...}}` settings dict."""
    class_ = import_from_string(class_settings['class'])
    return class_(**(class_settings.get('kwargs') or {}))

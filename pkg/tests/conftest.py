from hypothesis import settings

settings.register_profile("ppdet", max_examples=60, deadline=None)
settings.load_profile("ppdet")

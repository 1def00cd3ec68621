from apps.core.models.report import *
from apps.core.models.spectrum_set import *

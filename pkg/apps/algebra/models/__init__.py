from apps.algebra.models.algebra import *
from apps.algebra.models.character import *

# バージョン情報
__version__ = "1.0.0"
__author__ = "BlockSum Developers"
__email__ = ""
__description__ = "BlockSum - 桁ブロック関数 S_i の検証ライブラリ・高速系列生成・CLI"

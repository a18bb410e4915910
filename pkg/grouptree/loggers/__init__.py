"""Author: grouptree developers, Copyright 2026, MIT License"""

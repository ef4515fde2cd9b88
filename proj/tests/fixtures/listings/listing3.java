class IconPaneMouseListener implements MouseListener {
  boolean isDrag;
  boolean isMouseExited;

  public void mouseClicked(MouseEvent e) {
    if (!isDrag) {
      selectIcon();
    }
  }

  public void mousePressed(MouseEvent e) {
  }

  public void mouseReleased(MouseEvent e) {
    isDrag = false;
  }

  public void mouseEntered(MouseEvent e) {
    isMouseExited = false;
    refreshHighlight();
  }

  public void mouseExited(MouseEvent e) {
  }
}
